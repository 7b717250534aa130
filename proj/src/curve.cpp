#include "arfc/curve.hpp"

#include <cassert>

#include "arfc/errors.hpp"

namespace arfc {

CurveElement CurveElement::ones(std::size_t n) {
  return CurveElement(std::vector<SeriesFraction>(n, SeriesFraction::constant(1)));
}

CurveElement CurveElement::zero(std::size_t n) { return CurveElement(std::vector<SeriesFraction>(n)); }

bool CurveElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const SeriesFraction& f) { return f.is_zero(); });
}

namespace {

template <class Op>
CurveElement zip(const CurveElement& a, const CurveElement& b, Op op) {
  assert(a.arity() == b.arity());
  std::vector<SeriesFraction> out;
  out.reserve(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) out.push_back(op(a[i], b[i]));
  return CurveElement(std::move(out));
}

}  // namespace

CurveElement operator+(const CurveElement& a, const CurveElement& b) {
  return zip(a, b, [](const SeriesFraction& x, const SeriesFraction& y) { return x + y; });
}
CurveElement operator-(const CurveElement& a, const CurveElement& b) {
  return zip(a, b, [](const SeriesFraction& x, const SeriesFraction& y) { return x - y; });
}
CurveElement operator*(const CurveElement& a, const CurveElement& b) {
  return zip(a, b, [](const SeriesFraction& x, const SeriesFraction& y) { return x * y; });
}
CurveElement operator/(const CurveElement& a, const CurveElement& b) {
  return zip(a, b, [](const SeriesFraction& x, const SeriesFraction& y) { return x / y; });
}
CurveElement operator*(const Rational& c, const CurveElement& a) {
  std::vector<SeriesFraction> out;
  out.reserve(a.arity());
  for (const auto& f : a.coords()) out.push_back(c * f);
  return CurveElement(std::move(out));
}

CurveElement pow(const CurveElement& e, unsigned k) {
  std::vector<SeriesFraction> out;
  out.reserve(e.arity());
  for (const auto& f : e.coords()) out.push_back(pow(f, k));
  return CurveElement(std::move(out));
}

Parametrization normalize(const Parametrization& p) {
  Parametrization out{p.n, {}};
  for (const auto& g : p.generators) {
    assert(g.arity() == p.n);
    bool all_units = true;
    for (const auto& f : g.coords()) {
      if (f.ord() != Ord(0)) {
        all_units = false;
        break;
      }
    }
    if (all_units && p.n > 0) {
      const Rational gamma = g[0].constant_term();
      bool same = true;
      for (const auto& f : g.coords()) same = same && f.constant_term() == gamma;
      if (same) {
        CurveElement h = g - gamma * CurveElement::ones(p.n);
        if (!h.is_zero()) out.generators.push_back(std::move(h));
        continue;
      }
    }
    if (!g.is_zero()) out.generators.push_back(g);
  }
  if (out.generators.empty()) throw Error(ErrorCode::EmptyRing, "no generator survives normalization");
  return out;
}

ValVector valuation(const CurveElement& e) {
  ValVector v;
  v.reserve(e.arity());
  for (const auto& f : e.coords()) v.push_back(f.ord());
  return v;
}

std::vector<Exponent> multiplicity_vector(const Parametrization& p) {
  std::vector<Exponent> m(p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    Ord best = Ord::infinity();
    for (const auto& g : p.generators) best = std::min(best, g[i].ord());
    if (!best.is_finite()) {
      throw Error(ErrorCode::InfiniteComponent,
                  "branch " + std::to_string(i + 1) + " is zero on every generator");
    }
    m[i] = best.value();
  }
  return m;
}

Parametrization restrict(const Parametrization& p, const Block& block) {
  Parametrization out{block.size(), {}};
  out.generators.reserve(p.generators.size());
  for (const auto& g : p.generators) {
    std::vector<SeriesFraction> c;
    c.reserve(block.size());
    for (auto i : block) c.push_back(g[i]);
    out.generators.emplace_back(std::move(c));
  }
  return out;
}

CurveElement embed(const CurveElement& x, const Block& block, std::size_t n) {
  assert(x.arity() == block.size());
  CurveElement e = CurveElement::ones(n);
  for (std::size_t k = 0; k < block.size(); ++k) e[block[k]] = x[k];
  return e;
}

namespace {

bool achieves(const ValVector& v, const std::vector<Exponent>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (v[i] != Ord(m[i])) return false;
  }
  return true;
}

CurveElement checked(CurveElement x, const std::vector<Exponent>& m) {
  if (!achieves(valuation(x), m)) {
    throw Error(ErrorCode::SelectionFailed, "selected element has valuation " + to_string(valuation(x)));
  }
  return x;
}

}  // namespace

CurveElement minimal_element(const Parametrization& p) {
  const auto m = multiplicity_vector(p);
  const auto& gens = p.generators;
  const std::size_t k = gens.size();

  std::vector<ValVector> vals;
  vals.reserve(k);
  for (const auto& g : gens) vals.push_back(valuation(g));

  for (std::size_t a = 0; a < k; ++a) {
    if (achieves(vals[a], m)) return gens[a];
  }

  // Pairs: decided on orders and leading coefficients before adding.
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      bool ok = true;
      for (std::size_t i = 0; ok && i < p.n; ++i) {
        const bool ha = vals[a][i] == Ord(m[i]);
        const bool hb = vals[b][i] == Ord(m[i]);
        if (!ha && !hb) ok = false;
        if (ha && hb && gens[a][i].leading_coeff() + gens[b][i].leading_coeff() == 0) ok = false;
      }
      if (ok) return checked(gens[a] + gens[b], m);
    }
  }

  // Greedy combination over the first generator reaching each branch minimum.
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      if (vals[a][i] == Ord(m[i])) {
        if (std::find(chosen.begin(), chosen.end(), a) == chosen.end()) chosen.push_back(a);
        break;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());

  std::vector<std::size_t> last(p.n, k);
  for (auto a : chosen) {
    for (std::size_t i = 0; i < p.n; ++i) {
      if (vals[a][i] == Ord(m[i])) last[i] = a;
    }
  }

  std::vector<Rational> partial(p.n, 0);
  CurveElement x = CurveElement::zero(p.n);
  for (auto a : chosen) {
    Rational lambda;
    bool found = false;
    for (unsigned cand = 1; cand <= p.n + 1 && !found; ++cand) {
      found = true;
      for (std::size_t i = 0; i < p.n; ++i) {
        if (last[i] != a) continue;
        if (partial[i] + cand * gens[a][i].leading_coeff() == 0) {
          found = false;
          break;
        }
      }
      if (found) lambda = cand;
    }
    if (!found) throw Error(ErrorCode::SelectionFailed, "no coefficient avoids cancellation");
    for (std::size_t i = 0; i < p.n; ++i) {
      if (vals[a][i] == Ord(m[i])) partial[i] += lambda * gens[a][i].leading_coeff();
    }
    x = x + lambda * gens[a];
  }
  return checked(std::move(x), m);
}

std::vector<LabeledMult> mult_star(const Parametrization& p, const std::vector<Block>& parts) {
  std::vector<LabeledMult> out;
  out.reserve(parts.size());
  for (const auto& block : parts) {
    const auto m = multiplicity_vector(normalize(restrict(p, block)));
    LabeledMult lm{block, std::vector<Exponent>(p.n, 0)};
    for (std::size_t k = 0; k < block.size(); ++k) lm.vec[block[k]] = m[k];
    out.push_back(std::move(lm));
  }
  return out;
}

std::string to_string(const ValVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].to_string();
  }
  return s + ")";
}

}  // namespace arfc
