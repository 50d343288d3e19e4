#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace matroid {

// Outcome of one verification run: pass, or a self-contained counterexample
// witness.  Identical (id, seed, params) always produce identical reports.
struct CheckReport {
  std::string id;
  std::uint64_t seed = 0;
  int instances = 0;
  bool pass = true;
  nlohmann::json witness;  // null when pass

  nlohmann::json to_json() const {
    return nlohmann::json{{"theorem", id},
                          {"status", pass ? "pass" : "fail"},
                          {"instances", instances},
                          {"seed", seed},
                          {"witness", pass ? nlohmann::json() : witness}};
  }
};

}  // namespace matroid
