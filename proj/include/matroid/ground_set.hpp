#pragma once

#include <string>
#include <vector>

#include "matroid/mask.hpp"

namespace matroid {

// An ordered list of distinct element labels.  The order is significant:
// masks index elements by position, and constructions that join two ground
// sets always concatenate them first-then-second.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  // Effective size cap: the build-time limit, optionally lowered (never
  // raised) by the MATROID_MAX_N environment variable.
  static int max_size();

  int size() const { return static_cast<int>(labels_.size()); }
  Mask full() const { return (Mask{1} << labels_.size()) - 1; }
  std::uint32_t subset_count() const { return Mask{1} << labels_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  bool has_label(const std::string& l) const;
  int index_of(const std::string& l) const;  // throws UnknownLabel

  Mask mask_of(const std::vector<std::string>& subset) const;
  std::vector<std::string> labels_of(Mask m) const;

  bool operator==(const GroundSet& o) const { return labels_ == o.labels_; }
  bool operator!=(const GroundSet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> labels_;
};

// Concatenation; throws LabelCollision if the two share a label.
GroundSet concat(const GroundSet& a, const GroundSet& b);

}  // namespace matroid
