#include "arfc/bounds.hpp"

#include <cassert>
#include <exception>
#include <numeric>

#include "arfc/errors.hpp"
#include "arfc/lipman.hpp"
#include "arfc/tree.hpp"

namespace arfc {

BranchSequence branch_multiplicity_sequence(const std::vector<SeriesFraction>& gens) {
  Parametrization p{1, {}};
  for (const auto& g : gens) p.generators.push_back(CurveElement({g}));
  const auto seq = lipman_sequence(p, {512, ExecutionPolicy::serial});

  BranchSequence out;
  std::vector<Exponent> m;
  for (const auto& rec : seq.records) m.push_back(rec.blocks.front().mult.vec[0]);
  out.sequence = trim_sequence(std::move(m));
  out.length = out.sequence.size();
  if (!(out.length == 1 && out.sequence[0] == 1)) {
    out.conductor = std::accumulate(out.sequence.begin(), out.sequence.end(), Exponent(0));
  }
  return out;
}

std::vector<std::size_t> s_vector(const std::vector<Exponent>& m, std::size_t L) {
  std::vector<std::size_t> s;
  s.reserve(L);
  for (std::size_t k = 1; k <= L; ++k) {
    const auto sk = s_index(m, k);
    if (!sk) {
      throw Error(ErrorCode::NotAMultiplicitySequence,
                  "entry " + std::to_string(k) + " is not a sum of the entries after it");
    }
    s.push_back(*sk);
  }
  return s;
}

namespace {

std::size_t seq_length(const std::vector<Exponent>& m) {
  const auto t = trim_sequence(m);
  return t.size();
}

Exponent sum_to(const std::vector<Exponent>& m, std::size_t top) {
  Exponent s = 0;
  for (std::size_t k = 1; k <= top; ++k) s += k <= m.size() ? m[k - 1] : 1;
  return s;
}

bool is_partial_sum(const std::vector<Exponent>& m, Exponent d) {
  Exponent s = 0;
  for (std::size_t k = 1; s < d; ++k) {
    s += k <= m.size() ? m[k - 1] : 1;
    if (s == d) return true;
  }
  return false;
}

}  // namespace

std::optional<std::size_t> k_E(const std::vector<Exponent>& m1, const std::vector<Exponent>& m2) {
  const std::size_t L = std::max(seq_length(m1), seq_length(m2));
  const auto s1 = s_vector(m1, L);
  const auto s2 = s_vector(m2, L);
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < L; ++k) {
    if (s1[k] != s2[k]) {
      const std::size_t v = std::min(s1[k], s2[k]);
      if (!best || v < *best) best = v;
    }
  }
  return best;
}

Discrepancy discrepancy(const Parametrization& p) {
  assert(p.n == 2);
  Discrepancy d;
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    const Ord a = p.generators[g][0].ord();
    const Ord b = p.generators[g][1].ord();
    if (a == b) continue;
    d.indices.push_back(g);
    const Exponent m = std::min(a, b).value();
    if (!d.D || m < *d.D) d.D = m;
  }
  return d;
}

namespace {

struct Forced {
  Parametrization curve;
  std::optional<CurveElement> generated;  // front of curve when present
};

Forced force_step(const Parametrization& p) {
  assert(p.n == 2);
  std::vector<CurveElement> gens = p.generators;
  std::stable_sort(gens.begin(), gens.end(), [](const CurveElement& a, const CurveElement& b) {
    return valuation(a) < valuation(b);
  });
  const CurveElement& g1 = gens.front();
  const bool g1_differs = !(g1[0] == g1[1]);
  const Ord o1 = g1[0].ord();

  std::size_t pick = 0;
  for (std::size_t i = 1; i < gens.size() && pick == 0; ++i) {
    if (!gens[i][0].ord().is_finite() || !o1.is_finite()) continue;
    if (g1_differs || !(gens[i][0] == gens[i][1])) pick = i;
  }
  if (pick == 0) throw Error(ErrorCode::NoDiscrepancyPossible, "both branches carry the same series");

  const Exponent a = o1.value();
  const Exponent b = gens[pick][0].ord().value();
  const Exponent g = std::gcd(a, b);
  const unsigned r = g == 0 ? 1 : b / g;
  const unsigned s = g == 0 ? 1 : a / g;

  const CurveElement x = pow(g1, r);
  const CurveElement y = pow(gens[pick], s);
  const Rational lambda = -x[0].leading_coeff() / y[0].leading_coeff();
  CurveElement h = x + lambda * y;

  Forced out;
  out.curve.n = 2;
  if (!h.is_zero()) {
    out.generated = h;
    out.curve.generators.push_back(std::move(h));
  }
  for (std::size_t i = 1; i < gens.size(); ++i) out.curve.generators.push_back(std::move(gens[i]));
  if (out.curve.generators.empty()) throw Error(ErrorCode::NoDiscrepancyPossible, "generators cancel completely");
  return out;
}

struct Generated {
  Exponent D;
  std::size_t iterations;
};

// Iterate the discrepancy search until the generated element has different
// orders on the two branches, and read D off the ring extended by it.
Generated generated_discrepancy(const Parametrization& p, std::size_t max_iterations) {
  Parametrization cur = p;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    Forced f = force_step(cur);
    cur = std::move(f.curve);
    if (f.generated && (*f.generated)[0].ord() != (*f.generated)[1].ord()) {
      Parametrization extended = p;
      extended.generators.push_back(*f.generated);
      return {*discrepancy(extended).D, it};
    }
  }
  throw Error(ErrorCode::BoundIterationExceeded,
              "no discrepancy after " + std::to_string(max_iterations) + " substitutions");
}

Exponent discrepancy_bound(const BranchSequence& br, Exponent D) {
  if (!is_partial_sum(br.sequence, D)) {
    throw Error(ErrorCode::BoundAssertion,
                "discrepancy order " + std::to_string(D) + " is not a partial sum of the multiplicity sequence");
  }
  return std::max(br.conductor, D) + 1;
}

PairBound pair_bound(const Parametrization& raw, const BranchSequence& si, const BranchSequence& sj,
                     const BoundOptions& opts) {
  const Parametrization p = normalize(raw);
  PairBound out;
  out.kE = k_E(si.sequence, sj.sequence);
  if (out.kE) {
    out.kind = BoundCase::order;
    out.bi = sum_to(si.sequence, std::max(si.length, *out.kE)) + 1;
    out.bj = sum_to(sj.sequence, std::max(sj.length, *out.kE)) + 1;
    return out;
  }

  const Discrepancy dis = discrepancy(p);
  out.D = dis.D;
  if (dis.D) {
    const Exponent bd = discrepancy_bound(si, *dis.D);
    out.kind = BoundCase::discrepancy;
    out.bi = out.bj = bd;
    try {
      const Generated gen = generated_discrepancy(p, opts.max_iterations);
      const Exponent bg = discrepancy_bound(si, gen.D);
      out.generated = gen.D;
      out.iterations = gen.iterations;
      if (bg < bd) {
        out.kind = BoundCase::min_discrepancy_generated;
        out.bi = out.bj = bg;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoDiscrepancyPossible && e.code() != ErrorCode::BoundIterationExceeded) throw;
    }
    return out;
  }

  const Generated gen = generated_discrepancy(p, opts.max_iterations);
  out.kind = BoundCase::generated;
  out.generated = gen.D;
  out.iterations = gen.iterations;
  out.bi = out.bj = discrepancy_bound(si, gen.D);
  return out;
}

std::vector<SeriesFraction> column(const Parametrization& p, std::size_t i) {
  std::vector<SeriesFraction> out;
  for (const auto& g : p.generators) out.push_back(g[i]);
  return out;
}

}  // namespace

Parametrization force_discrepancy(const Parametrization& p) { return force_step(p).curve; }

std::string to_string(BoundCase c) {
  switch (c) {
    case BoundCase::order: return "order";
    case BoundCase::discrepancy: return "discrepancy";
    case BoundCase::generated: return "generated";
    case BoundCase::min_discrepancy_generated: return "min(discrepancy,generated)";
  }
  return "?";
}

PairBound bound_two_branch(const Parametrization& p, const BoundOptions& opts) {
  assert(p.n == 2);
  const Parametrization q = normalize(p);
  PairBound b = pair_bound(q, branch_multiplicity_sequence(column(q, 0)),
                           branch_multiplicity_sequence(column(q, 1)), opts);
  b.i = 0;
  b.j = 1;
  return b;
}

BoundReport bound_curve(const Parametrization& input, const BoundOptions& opts) {
  const Parametrization p = normalize(input);
  const std::size_t n = p.n;
  BoundReport rep;
  rep.branches.resize(n);
  std::vector<std::exception_ptr> errors(n);
  const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) if (opts.policy == ExecutionPolicy::parallel && nn > 1)
  for (long long i = 0; i < nn; ++i) {
    try {
      rep.branches[i] = branch_multiplicity_sequence(column(p, i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  if (n == 1) {
    rep.bound = {rep.branches[0].conductor + 1};
    return rep;
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  rep.pairs.resize(pairs.size());
  errors.assign(pairs.size(), nullptr);
  const long long np = static_cast<long long>(pairs.size());
#pragma omp parallel for schedule(dynamic) if (opts.policy == ExecutionPolicy::parallel && np > 1)
  for (long long k = 0; k < np; ++k) {
    try {
      const auto [i, j] = pairs[k];
      PairBound b = pair_bound(restrict(p, {i, j}), rep.branches[i], rep.branches[j], opts);
      b.i = i;
      b.j = j;
      rep.pairs[k] = std::move(b);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  rep.bound.assign(n, 1);
  for (const auto& b : rep.pairs) {
    rep.bound[b.i] = std::max(rep.bound[b.i], b.bi);
    rep.bound[b.j] = std::max(rep.bound[b.j], b.bj);
  }
  return rep;
}

Parametrization truncate_curve(const Parametrization& p, const std::vector<Exponent>& b) {
  assert(b.size() == p.n);
  Parametrization out{p.n, {}};
  for (const auto& g : p.generators) {
    std::vector<SeriesFraction> coords;
    for (std::size_t i = 0; i < p.n; ++i) coords.emplace_back(expand_to_cap(g[i], b[i] + 1));
    out.generators.emplace_back(std::move(coords));
  }
  return normalize(out);
}

}  // namespace arfc
