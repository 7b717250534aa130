#pragma once

// Minimal tree and the finite K-linear presentation of the Arf closure.

#include <vector>

#include "arfc/lipman.hpp"
#include "arfc/tree.hpp"

namespace arfc {

struct MinimalNode {
  Block block;
  std::size_t level = 0;
  CurveElement element;  // embedded: constant 1 off the block
};

struct MinimalTree {
  std::size_t n = 0;
  std::vector<std::vector<MinimalNode>> levels;  // levels[m - 1]

  /// Element at (block, m). Below the last recorded level every block is a
  /// regular branch and carries t_i.
  CurveElement at(const Block& block, std::size_t m) const;
};

struct BasisEntry {
  SemigroupVector valuation;
  std::vector<Polynomial> coords;
};

/// R* = K(1,...,1) + sum K*basis + conductor ideal.
struct ClosurePresentation {
  SemigroupVector conductor;
  std::vector<BasisEntry> basis;  // sorted by valuation
};

MinimalTree minimal_tree(const LipmanSequence& seq);

/// One representative per small element below the conductor: the product of
/// the minimal-tree elements on its realizing subtree, with coordinate i
/// truncated to degrees < conductor[i].
ClosurePresentation presentation(const MinimalTree& mt, const MultiplicityTree& t,
                                 ExecutionPolicy policy = ExecutionPolicy::parallel);

}  // namespace arfc
