#pragma once

#include <optional>

#include "arfc/bounds.hpp"
#include "arfc/closure.hpp"
#include "arfc/lipman.hpp"
#include "arfc/tree.hpp"

namespace arfc::io {

struct PipelineOptions {
  bool truncate = true;
  std::size_t max_steps = 512;
  ExecutionPolicy policy = ExecutionPolicy::parallel;
};

struct PipelineResult {
  Parametrization input;
  std::optional<BoundReport> bound;  // absent without truncation
  Parametrization used;              // input after truncation
  LipmanSequence lipman;
  MultiplicityTree tree;
  SemigroupVector conductor;
  std::vector<SemigroupVector> small;
  MinimalTree minimal;
  ClosurePresentation presentation;
  bool arf = false;
};

/// bound -> truncate -> blow-ups -> tree -> conductor -> small elements ->
/// minimal tree -> presentation -> Arf check. Errors carry the stage name.
PipelineResult run_pipeline(const Parametrization& p, const PipelineOptions& opts = {});

}  // namespace arfc::io
