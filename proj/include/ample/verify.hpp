#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ample/automorphisms.hpp"

namespace ample {

struct CheckResult {
  std::string id;
  bool pass = true;
  std::string witness;  // first counterexample; empty on pass
  std::size_t cases = 0;
};

struct VerifyReport {
  std::string theorem;
  std::vector<CheckResult> checks;  // sorted by id
  bool all_pass() const;
};

struct VerifyOptions {
  std::size_t samples = 50;
  std::uint64_t seed = 0;
  // Exhaustive over Aut(G) (resp. F(G)) up to this order, sampled beyond.
  std::size_t exhaustive_limit = 120;
};

// theorem is one of "2.6", "3.7A", "3.7I", "3.7O". (I) and (O) throw
// EffectivenessRequired on non-effective groupoids; an unknown theorem
// throws std::invalid_argument.
VerifyReport verify(const GroupoidPtr& g, const std::string& theorem,
                    const VerifyOptions& options = {});

// Helpers shared with the tests: angles k/denominator with k drawn uniformly.
Angle random_angle(std::mt19937_64& rng, std::int64_t denominator = 12);
CircleFunction random_circle_function(const FiniteGroupoid& g, std::mt19937_64& rng,
                                      std::int64_t denominator = 12);
std::size_t random_index(std::mt19937_64& rng, std::size_t n);

}  // namespace ample
