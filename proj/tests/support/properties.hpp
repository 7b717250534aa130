#pragma once

// Randomized curves and the general claims checked on each of them.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "arfc/curve.hpp"

namespace properties {

/// n <= 3 branches, <= 3 generators, degrees <= 12, every order >= 1.
arfc::Parametrization random_curve(std::mt19937_64& rng);

struct Outcome {
  bool rejected = false;              // blow-ups did not finish under the cap
  std::size_t depth = 0;              // tree depth of an accepted curve
  std::vector<std::string> failures;  // empty when every claim holds
};

/// Curves that are not resolved after this many blow-ups are rejected: with
/// degrees <= 12 a resolvable curve needs far fewer levels, and the rejected
/// ones (non-birational or coinciding branches) never finish while their
/// fractions keep growing.
inline constexpr std::size_t kStepCap = 24;

/// (a) valid tree and Arf, (b) truncation invariance, (c) ram <= k_E,
/// (d) bound >= conductor + 1, (e) small elements = box scan = subtree sums,
/// plus the conductor against a brute-force search.
Outcome check_curve(const arfc::Parametrization& p, std::size_t max_steps = kStepCap);

struct Summary {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t max_depth = 0;  // deepest accepted tree
  std::vector<std::string> failures;  // "sample k: claim"
};

Summary run(std::size_t count, std::uint64_t seed);

}  // namespace properties
