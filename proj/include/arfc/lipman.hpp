#pragma once

// Iterated blow-up of a parametrized ring down to K[[t_1]] x ... x K[[t_n]].

#include <cstddef>
#include <vector>

#include "arfc/curve.hpp"
#include "arfc/locality.hpp"

namespace arfc {

struct BlockRecord {
  Block block;
  LabeledMult mult;
  CurveElement minimal;        // in the block's own coordinates
  CurveElement embedded;       // n coordinates, constant 1 off the block
  Parametrization generators;  // restricted to the block, normalized
  bool finished = false;       // singleton block of multiplicity 1
};

struct BlowupRecord {
  std::size_t level = 0;  // 1-based
  Partition partition;
  std::vector<BlockRecord> blocks;  // same order as partition
};

struct LipmanSequence {
  std::size_t n = 0;
  std::vector<BlowupRecord> records;
};

struct LipmanOptions {
  std::size_t max_steps = 512;
  ExecutionPolicy policy = ExecutionPolicy::parallel;
};

/// Generators x, g_1/x, ..., g_k/x, normalized.
Parametrization blowup_local(const Parametrization& p, const CurveElement& x);

/// Records for levels 1..N, the last one having every block a finished
/// singleton. Throws MaxStepsExceeded past opts.max_steps levels.
LipmanSequence lipman_sequence(const Parametrization& p, const LipmanOptions& opts = {});

}  // namespace arfc
