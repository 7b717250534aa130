#pragma once

// Multiplicity trees of Arf good semigroups, given by the sequences E and the
// ramification matrix.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arfc/lipman.hpp"
#include "arfc/parallel.hpp"

namespace arfc {

using SemigroupVector = std::vector<Exponent>;

struct MultiplicityTree {
  std::vector<std::vector<Exponent>> sequences;  // trailing 1s trimmed, never empty
  std::vector<std::vector<std::size_t>> ram;     // upper triangular, ram[i][j] for i < j

  std::size_t n() const { return sequences.size(); }
  /// M_i[k] for k >= 1, extended by 1s.
  Exponent mult(std::size_t i, std::size_t k) const;
  /// Length l_i: last index with entry != 1, or 1.
  std::size_t length(std::size_t i) const;
  /// p_{i,j} for any i != j.
  std::size_t glued(std::size_t i, std::size_t j) const;
  /// Last level at which branch i is glued to another branch (0 when n == 1).
  std::size_t last_glued(std::size_t i) const;
  /// Deepest level carrying information: max over l_i and all p_{i,j}.
  std::size_t depth() const;
  /// Branch classes at level m (blocks of the equivalence p_{i,j} >= m).
  std::vector<Block> blocks_at(std::size_t m) const;
  /// Node vector of the block containing `block` at level m (0 off the block).
  SemigroupVector node(const Block& block, std::size_t m) const;

  friend bool operator==(const MultiplicityTree&, const MultiplicityTree&) = default;
};

/// Trim a sequence of multiplicities to its canonical form.
std::vector<Exponent> trim_sequence(std::vector<Exponent> m);

/// Least s >= k+1 with M[k] = M[k+1] + ... + M[s] (1-based, 1-padded).
std::optional<std::size_t> s_index(const std::vector<Exponent>& m, std::size_t k);

MultiplicityTree build_tree(const LipmanSequence& seq);

SemigroupVector conductor(const MultiplicityTree& t);

/// True iff v is the node-sum of a finite subtree rooted at (block, m).
bool rooted_member(const MultiplicityTree& t, const Block& block, std::size_t m, const SemigroupVector& v);

bool semigroup_member(const MultiplicityTree& t, const SemigroupVector& v);

/// The nodes (block, level) of the unique subtree realizing a nonzero
/// member v, in level-then-branch order; empty if v is not a member.
/// Chains continuing below the tree depth are listed node by node.
std::vector<std::pair<Block, std::size_t>> realizing_subtree(const MultiplicityTree& t, const SemigroupVector& v);

/// Nonzero semigroup elements <= conductor, sorted lexicographically.
std::vector<SemigroupVector> small_elements(const MultiplicityTree& t);

/// The same set found by testing every vector of the box [0, c].
std::vector<SemigroupVector> small_elements_by_scan(const MultiplicityTree& t,
                                                    ExecutionPolicy policy = ExecutionPolicy::parallel);

struct TreeDiagnostic {
  bool valid = true;
  std::string axiom;   // empty when valid
  std::string detail;
};

TreeDiagnostic validate_tree(const MultiplicityTree& t);

/// Arf condition on the tree's semigroup: for small alpha <= beta1, beta2,
/// beta1 + beta2 - alpha is a member.
bool check_arf(const MultiplicityTree& t);

/// Same check for an explicit good semigroup given by its small elements and
/// conductor; v is a member iff min(v, c) is small or zero.
bool check_arf(const std::vector<SemigroupVector>& small, const SemigroupVector& conductor);

std::string to_string(const SemigroupVector& v);

}  // namespace arfc
