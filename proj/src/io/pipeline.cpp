#include "arfc/io/pipeline.hpp"

#include "arfc/errors.hpp"

namespace arfc::io {

namespace {

template <class F>
auto stage(const char* name, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw e.in_stage(name);
  }
}

}  // namespace

PipelineResult run_pipeline(const Parametrization& p, const PipelineOptions& opts) {
  PipelineResult r;
  r.input = p;
  r.used = p;
  if (opts.truncate) {
    r.bound = stage("bound", [&] { return bound_curve(p, {64, opts.policy}); });
    r.used = stage("truncate", [&] { return truncate_curve(p, r.bound->bound); });
  }
  r.lipman = stage("blow-up", [&] { return lipman_sequence(r.used, {opts.max_steps, opts.policy}); });
  r.tree = build_tree(r.lipman);
  r.conductor = stage("conductor", [&] { return conductor(r.tree); });
  r.small = stage("small elements", [&] { return small_elements(r.tree); });
  r.minimal = minimal_tree(r.lipman);
  r.presentation = stage("presentation", [&] { return presentation(r.minimal, r.tree, opts.policy); });
  r.arf = stage("arf check", [&] { return check_arf(r.tree); });
  return r;
}

}  // namespace arfc::io
