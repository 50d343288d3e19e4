#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace matroid {

// Base class for all library errors. `code` is a stable machine-readable
// tag; the CLI prints it next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

enum class Axiom {
  Normalization,   // r(empty) == 0
  UnitBound,       // 0 <= r(X) <= |X|
  Monotonicity,    // X subset of Y implies r(X) <= r(Y)
  Submodularity,   // r(X u Y) + r(X n Y) <= r(X) + r(Y)
};

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Normalization: return "normalization";
    case Axiom::UnitBound: return "unit_bound";
    case Axiom::Monotonicity: return "monotonicity";
    case Axiom::Submodularity: return "submodularity";
  }
  return "?";
}

// A rank table failed one of the four axioms; x and y are witness subsets
// (for monotonicity a covering pair, for submodularity the violating pair).
class AxiomViolation : public Error {
 public:
  AxiomViolation(Axiom axiom, std::uint32_t x, std::uint32_t y)
      : Error("axiom_violation",
              std::string("rank table violates ") + axiom_name(axiom)),
        axiom_(axiom), x_(x), y_(y) {}
  Axiom axiom() const noexcept { return axiom_; }
  std::uint32_t x() const noexcept { return x_; }
  std::uint32_t y() const noexcept { return y_; }

 private:
  Axiom axiom_;
  std::uint32_t x_, y_;
};

struct GroundTooLarge : Error {
  explicit GroundTooLarge(int n, int cap)
      : Error("ground_too_large",
              "ground set of size " + std::to_string(n) +
                  " exceeds the configured limit " + std::to_string(cap)) {}
};

struct LabelCollision : Error {
  explicit LabelCollision(const std::string& label)
      : Error("label_collision", "duplicate label \"" + label + "\"") {}
};

struct UnknownLabel : Error {
  explicit UnknownLabel(const std::string& label)
      : Error("unknown_label", "label \"" + label + "\" is not in the ground set") {}
  explicit UnknownLabel(int bit)
      : Error("unknown_label",
              "mask bit " + std::to_string(bit) + " is outside the ground set") {}
};

struct GroundSetMismatch : Error {
  GroundSetMismatch()
      : Error("ground_set_mismatch",
              "operands must share the same ground set (same labels, same order)") {}
};

struct OverlappingSets : Error {
  explicit OverlappingSets(const std::string& what)
      : Error("overlapping_sets", what) {}
};

struct InvalidTable : Error {
  explicit InvalidTable(const std::string& what) : Error("invalid_table", what) {}
};

struct RankOutOfRange : Error {
  explicit RankOutOfRange(const std::string& what)
      : Error("rank_out_of_range", what) {}
};

struct NotABasis : Error {
  NotABasis() : Error("not_a_basis", "the given set is not a basis") {}
};

struct ElementInBasis : Error {
  ElementInBasis()
      : Error("element_in_basis",
              "the element must lie outside the given basis") {}
};

struct NotAQuotient : Error {
  NotAQuotient() : Error("not_a_quotient", "first matroid is not a quotient of the second") {}
};

struct NonPrimeModulus : Error {
  explicit NonPrimeModulus(std::uint64_t p)
      : Error("non_prime_modulus", std::to_string(p) + " is not prime") {}
};

struct ModulusTooSmall : Error {
  explicit ModulusTooSmall(std::uint64_t p)
      : Error("modulus_too_small",
              "modulus " + std::to_string(p) +
                  " is too small for randomized scalar substitution (need >= 2^20)") {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what)
      : Error("dimension_mismatch", what) {}
};

struct CyclicFlatCapExceeded : Error {
  explicit CyclicFlatCapExceeded(int count, int cap)
      : Error("cyclic_flat_cap_exceeded",
              "matroid has " + std::to_string(count) +
                  " cyclic flats, above the inclusion-exclusion cap " +
                  std::to_string(cap)) {}
};

struct SearchBudgetExceeded : Error {
  explicit SearchBudgetExceeded(const std::string& what)
      : Error("search_budget_exceeded", what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& path, const std::string& what)
      : Error("parse_error", "at " + path + ": " + what) {}
};

struct UnknownCheck : Error {
  explicit UnknownCheck(const std::string& id)
      : Error("unknown_check", "no such check: " + id) {}
};

}  // namespace matroid
