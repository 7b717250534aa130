#include "arfc/lipman.hpp"

#include <cassert>
#include <exception>

#include "arfc/errors.hpp"

namespace arfc {

Parametrization blowup_local(const Parametrization& p, const CurveElement& x) {
  Parametrization out{p.n, {x}};
  out.generators.reserve(p.generators.size() + 1);
  for (const auto& g : p.generators) out.generators.push_back(g / x);
  return normalize(out);
}

namespace {

struct BlockState {
  Block block;  // global indices
  Parametrization gens;
};

// Split a block-local parametrization into its local pieces, lifting the
// piece indices back to global branch numbers.
std::vector<BlockState> split(const Block& global, const Parametrization& gens, ExecutionPolicy policy) {
  std::vector<BlockState> out;
  for (const auto& piece : partition(gens, policy)) {
    Block g;
    g.reserve(piece.size());
    for (auto k : piece) g.push_back(global[k]);
    out.push_back({std::move(g), piece.size() == gens.n ? gens : normalize(restrict(gens, piece))});
  }
  return out;
}

BlockRecord describe(const BlockState& s, std::size_t n) {
  BlockRecord r;
  r.block = s.block;
  r.generators = s.gens;
  const auto m = multiplicity_vector(s.gens);
  r.mult = LabeledMult{s.block, std::vector<Exponent>(n, 0)};
  for (std::size_t k = 0; k < s.block.size(); ++k) r.mult.vec[s.block[k]] = m[k];
  r.finished = s.block.size() == 1 && m[0] == 1;
  r.minimal = r.finished ? CurveElement({SeriesFraction(Polynomial::monomial(1, 1))}) : minimal_element(s.gens);
  r.embedded = embed(r.minimal, s.block, n);
  return r;
}

}  // namespace

LipmanSequence lipman_sequence(const Parametrization& input, const LipmanOptions& opts) {
  const std::size_t n = input.n;
  const Parametrization p = normalize(input);
  LipmanSequence seq{n, {}};

  std::vector<BlockState> states = split(Block([&] {
                                           Block all(n);
                                           for (std::size_t i = 0; i < n; ++i) all[i] = i;
                                           return all;
                                         }()),
                                         p, opts.policy);

  for (std::size_t level = 1;; ++level) {
    if (level > opts.max_steps) {
      throw Error(ErrorCode::MaxStepsExceeded,
                  "blow-up sequence did not terminate within " + std::to_string(opts.max_steps) + " levels");
    }
    const std::size_t nb = states.size();
    BlowupRecord rec;
    rec.level = level;
    rec.blocks.resize(nb);
    std::vector<std::vector<BlockState>> next(nb);
    std::vector<std::exception_ptr> errors(nb);

    const long long count = static_cast<long long>(nb);
#pragma omp parallel for schedule(dynamic) if (opts.policy == ExecutionPolicy::parallel && count > 1)
    for (long long b = 0; b < count; ++b) {
      try {
        rec.blocks[b] = describe(states[b], n);
        if (rec.blocks[b].finished) {
          next[b] = {states[b]};
        } else {
          next[b] = split(states[b].block, blowup_local(states[b].gens, rec.blocks[b].minimal),
                          ExecutionPolicy::serial);
        }
      } catch (...) {
        errors[b] = std::current_exception();
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    bool done = true;
    for (const auto& b : rec.blocks) {
      rec.partition.push_back(b.block);
      done = done && b.finished;
    }
    seq.records.push_back(std::move(rec));
    if (done) break;

    std::vector<BlockState> flat;
    for (auto& v : next) {
      for (auto& s : v) flat.push_back(std::move(s));
    }
    // Children come out grouped by parent, so sorting by least element gives
    // the canonical order; refinement holds by construction.
    std::sort(flat.begin(), flat.end(),
              [](const BlockState& a, const BlockState& b) { return a.block.front() < b.block.front(); });
    states = std::move(flat);
  }
  return seq;
}

}  // namespace arfc
