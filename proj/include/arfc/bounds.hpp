#pragma once

// Degree bounds b such that truncating every coordinate above b leaves the
// multiplicity tree unchanged.

#include <optional>
#include <string>
#include <vector>

#include "arfc/curve.hpp"
#include "arfc/parallel.hpp"

namespace arfc {

struct BranchSequence {
  std::vector<Exponent> sequence;  // trimmed
  std::size_t length = 1;
  Exponent conductor = 0;  // c_r
};

/// Multiplicity sequence of the single branch K[[gens]].
BranchSequence branch_multiplicity_sequence(const std::vector<SeriesFraction>& gens);

/// s_k for k = 1..L. Throws NotAMultiplicitySequence.
std::vector<std::size_t> s_vector(const std::vector<Exponent>& m, std::size_t L);

/// nullopt stands for infinity (identical sequences).
std::optional<std::size_t> k_E(const std::vector<Exponent>& m1, const std::vector<Exponent>& m2);

struct Discrepancy {
  std::vector<std::size_t> indices;  // generators whose two orders differ
  std::optional<Exponent> D;
};

Discrepancy discrepancy(const Parametrization& p);

/// One step of the discrepancy search: the first generator (after sorting by
/// valuation) is replaced by g1^r + b*g_i^s, which has higher order on the
/// first branch. Throws NoDiscrepancyPossible.
Parametrization force_discrepancy(const Parametrization& p);

enum class BoundCase { order, discrepancy, generated, min_discrepancy_generated };

std::string to_string(BoundCase c);

struct PairBound {
  std::size_t i = 0, j = 0;
  BoundCase kind = BoundCase::order;
  std::optional<std::size_t> kE;
  std::optional<Exponent> D;          // discrepancy value of the input pair
  std::optional<Exponent> generated;  // D reached by the generated element
  std::size_t iterations = 0;
  Exponent bi = 0, bj = 0;
};

struct BoundOptions {
  std::size_t max_iterations = 64;
  ExecutionPolicy policy = ExecutionPolicy::parallel;
};

PairBound bound_two_branch(const Parametrization& p, const BoundOptions& opts = {});

struct BoundReport {
  std::vector<Exponent> bound;
  std::vector<BranchSequence> branches;
  std::vector<PairBound> pairs;
};

BoundReport bound_curve(const Parametrization& p, const BoundOptions& opts = {});

/// Keep degrees <= b[i] in coordinate i, then normalize.
Parametrization truncate_curve(const Parametrization& p, const std::vector<Exponent>& b);

}  // namespace arfc
