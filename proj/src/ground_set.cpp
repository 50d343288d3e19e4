#include "matroid/ground_set.hpp"

#include <cstdlib>

#include "matroid/errors.hpp"

#ifndef MATROID_MAX_N
#define MATROID_MAX_N 16
#endif

namespace matroid {

int GroundSet::max_size() {
  static const int cap = [] {
    int limit = MATROID_MAX_N;
    if (limit > 16) limit = 16;  // masks and tables are sized for 16 bits
    if (const char* env = std::getenv("MATROID_MAX_N")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      // The environment may lower the cap but never raise it.
      if (end != env && *end == '\0' && v >= 0 && v < limit)
        limit = static_cast<int>(v);
    }
    return limit;
  }();
  return cap;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) > max_size())
    throw GroundTooLarge(static_cast<int>(labels_.size()), max_size());
  for (size_t i = 0; i < labels_.size(); ++i)
    for (size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j]) throw LabelCollision(labels_[i]);
}

bool GroundSet::has_label(const std::string& l) const {
  for (const auto& s : labels_)
    if (s == l) return true;
  return false;
}

int GroundSet::index_of(const std::string& l) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == l) return static_cast<int>(i);
  throw UnknownLabel(l);
}

Mask GroundSet::mask_of(const std::vector<std::string>& subset) const {
  Mask m = 0;
  for (const auto& l : subset) m |= bit(index_of(l));
  return m;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
  std::vector<std::string> out;
  for_each_bit(m, [&](int i) { out.push_back(labels_[static_cast<size_t>(i)]); });
  return out;
}

GroundSet concat(const GroundSet& a, const GroundSet& b) {
  std::vector<std::string> all = a.labels();
  for (const auto& l : b.labels()) {
    if (a.has_label(l)) throw LabelCollision(l);
    all.push_back(l);
  }
  return GroundSet(std::move(all));
}

}  // namespace matroid
