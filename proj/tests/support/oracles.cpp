#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

namespace oracle {

using arfc::CurveElement;
using arfc::Ord;

std::vector<Rational> series(const SeriesFraction& f, Exponent cap) {
  std::vector<Rational> num(cap), den(cap), q(cap);
  for (const auto& t : f.num().terms()) {
    if (t.exp < cap) num[t.exp] = t.coeff;
  }
  for (const auto& t : f.den().terms()) {
    if (t.exp < cap) den[t.exp] = t.coeff;
  }
  for (Exponent k = 0; k < cap; ++k) {
    Rational r = num[k];
    for (Exponent j = 1; j <= k; ++j) r -= den[j] * q[k - j];
    q[k] = r / den[0];
  }
  return q;
}

bool agrees_to_cap(const Polynomial& p, const SeriesFraction& f, Exponent cap) {
  const Polynomial lhs = (p * f.den()).truncated_below(cap);
  const Polynomial rhs = f.num().truncated_below(cap);
  return lhs == rhs && p.truncated_below(cap) == p;
}

namespace {

using Gens = std::vector<CurveElement>;

bool unit(const SeriesFraction& f) { return f.ord() == Ord(0); }

Gens normalize2(const Gens& gens) {
  Gens out;
  for (const auto& g : gens) {
    CurveElement h = g;
    if (unit(g[0]) && unit(g[1]) && g[0].constant_term() == g[1].constant_term()) {
      h = g - g[0].constant_term() * CurveElement::ones(2);
    }
    if (!(h[0].is_zero() && h[1].is_zero())) out.push_back(h);
  }
  return out;
}

std::vector<SeriesFraction> normalize1(const std::vector<SeriesFraction>& gens) {
  std::vector<SeriesFraction> out;
  for (const auto& g : gens) {
    SeriesFraction h = unit(g) ? g - SeriesFraction::constant(g.constant_term()) : g;
    if (!h.is_zero()) out.push_back(h);
  }
  return out;
}

bool lemma_local(const Gens& gens) {
  for (const auto& g : gens) {
    if (unit(g[0]) != unit(g[1])) return false;
    if (unit(g[0]) && g[0].constant_term() != g[1].constant_term()) return false;
  }
  return true;
}

Exponent min_ord(const std::vector<SeriesFraction>& gens) {
  Ord m = Ord::infinity();
  for (const auto& g : gens) m = std::min(m, g.ord());
  if (!m.is_finite()) throw std::runtime_error("oracle: zero branch");
  return m.value();
}

std::vector<SeriesFraction> column(const Gens& gens, std::size_t i) {
  std::vector<SeriesFraction> out;
  for (const auto& g : gens) out.push_back(g[i]);
  return out;
}

const SeriesFraction& first_of_order(const std::vector<SeriesFraction>& gens, Exponent m) {
  for (const auto& g : gens) {
    if (g.ord() == Ord(m)) return g;
  }
  throw std::runtime_error("oracle: no element of minimal order");
}

std::vector<SeriesFraction> branch_blowup(const std::vector<SeriesFraction>& gens, const SeriesFraction& x) {
  std::vector<SeriesFraction> next{x};
  for (const auto& g : gens) next.push_back(g / x);
  return normalize1(next);
}

CurveElement single(const SeriesFraction& f) { return CurveElement({f}); }

}  // namespace

std::vector<Alg1Level> algorithm1(const arfc::Parametrization& p, std::size_t max_steps) {
  std::vector<Alg1Level> out;
  Gens R = normalize2(p.generators);
  bool split = false;
  std::vector<SeriesFraction> R1, R2;

  for (std::size_t m = 1; m <= max_steps; ++m) {
    Alg1Level level;
    if (!split && lemma_local(R)) {
      level.local = true;
      const Exponent a = min_ord(column(R, 0));
      const Exponent b = min_ord(column(R, 1));
      level.mult_star = {{a, b}};
      const std::vector<Ord> target{Ord(a), Ord(b)};
      std::optional<CurveElement> x;
      for (const auto& g : R) {
        if (arfc::valuation(g) == target) {
          x = g;
          break;
        }
      }
      for (std::size_t i = 0; !x && i < R.size(); ++i) {
        for (std::size_t j = i + 1; !x && j < R.size(); ++j) {
          const CurveElement s = R[i] + R[j];
          if (arfc::valuation(s) == target) x = s;
        }
      }
      if (!x) throw std::runtime_error("oracle: no element of minimal value");
      level.minimal = {*x};
      level.generators = {R};
      out.push_back(level);

      Gens next{*x};
      for (const auto& g : R) next.push_back(g / *x);
      R = normalize2(next);
      continue;
    }

    if (!split) {
      split = true;
      R1 = normalize1(column(R, 0));
      R2 = normalize1(column(R, 1));
    }
    const Exponent a = min_ord(R1);
    const Exponent b = min_ord(R2);
    level.mult_star = {{a, 0}, {0, b}};
    const SeriesFraction& x1 = first_of_order(R1, a);
    const SeriesFraction& x2 = first_of_order(R2, b);
    level.minimal = {CurveElement({x1, SeriesFraction::constant(1)}), CurveElement({SeriesFraction::constant(1), x2})};
    Gens g1, g2;
    for (const auto& f : R1) g1.push_back(single(f));
    for (const auto& f : R2) g2.push_back(single(f));
    level.generators = {g1, g2};
    out.push_back(level);
    if (a == 1 && b == 1) return out;
    // K[[t]] blows up to itself.
    if (a != 1) R1 = branch_blowup(R1, x1);
    if (b != 1) R2 = branch_blowup(R2, x2);
  }
  throw std::runtime_error("oracle: step cap reached");
}

std::vector<Exponent> branch_sequence(const std::vector<SeriesFraction>& input, std::size_t max_steps) {
  std::vector<SeriesFraction> gens = normalize1(input);
  std::vector<Exponent> seq;
  for (std::size_t step = 0; step < max_steps; ++step) {
    const Exponent m = min_ord(gens);
    seq.push_back(m);
    if (m == 1) {
      while (seq.size() > 1 && seq.back() == 1) seq.pop_back();
      return seq;
    }
    gens = branch_blowup(gens, first_of_order(gens, m));
  }
  throw std::runtime_error("oracle: branch did not resolve");
}

std::set<arfc::SemigroupVector> subtree_sums(const arfc::MultiplicityTree& t, const arfc::SemigroupVector& box) {
  const std::size_t n = t.n();
  Exponent span = 0;
  for (auto b : box) span = std::max(span, b);
  const std::size_t levels = t.depth() + span + 1;

  struct Node {
    arfc::SemigroupVector value;
    long parent;
  };
  std::vector<Node> nodes;
  std::vector<std::pair<arfc::Block, long>> prev;
  for (std::size_t m = 1; m <= levels; ++m) {
    std::vector<std::pair<arfc::Block, long>> cur;
    for (const auto& b : t.blocks_at(m)) {
      long parent = -1;
      for (const auto& [pb, idx] : prev) {
        if (std::find(pb.begin(), pb.end(), b.front()) != pb.end()) parent = idx;
      }
      nodes.push_back({t.node(b, m), parent});
      cur.emplace_back(b, static_cast<long>(nodes.size() - 1));
    }
    prev = std::move(cur);
  }

  std::set<arfc::SemigroupVector> out;
  std::vector<char> in(nodes.size(), 0);
  arfc::SemigroupVector sum(n, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == nodes.size()) {
      if (in[0]) out.insert(sum);
      return;
    }
    walk(k + 1);  // node k left out
    const bool allowed = nodes[k].parent < 0 || in[nodes[k].parent];
    if (!allowed) return;
    bool fits = true;
    for (std::size_t i = 0; i < n; ++i) fits = fits && sum[i] + nodes[k].value[i] <= box[i];
    if (!fits) return;
    for (std::size_t i = 0; i < n; ++i) sum[i] += nodes[k].value[i];
    in[k] = 1;
    walk(k + 1);
    in[k] = 0;
    for (std::size_t i = 0; i < n; ++i) sum[i] -= nodes[k].value[i];
  };
  walk(0);
  return out;
}

arfc::SemigroupVector brute_conductor(const std::set<arfc::SemigroupVector>& members,
                                      const arfc::SemigroupVector& limit) {
  const std::size_t n = limit.size();
  std::size_t volume = 1;
  for (auto x : limit) volume *= x + 1;
  auto decode = [&](std::size_t idx) {
    arfc::SemigroupVector v(n);
    for (std::size_t i = n; i-- > 0;) {
      v[i] = idx % (limit[i] + 1);
      idx /= limit[i] + 1;
    }
    return v;
  };
  auto encode = [&](const arfc::SemigroupVector& v) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) idx = idx * (limit[i] + 1) + v[i];
    return idx;
  };
  // dominated[c]: some non-member of the box lies above c.
  std::vector<char> dominated(volume, 0);
  for (std::size_t idx = volume; idx-- > 0;) {
    const auto v = decode(idx);
    const bool zero = std::all_of(v.begin(), v.end(), [](Exponent x) { return x == 0; });
    bool d = !zero && !members.count(v);
    for (std::size_t i = 0; i < n && !d; ++i) {
      if (v[i] < limit[i]) {
        auto w = v;
        ++w[i];
        d = dominated[encode(w)];
      }
    }
    dominated[idx] = d;
  }
  arfc::SemigroupVector best = limit;
  for (std::size_t idx = 0; idx < volume; ++idx) {
    if (dominated[idx]) continue;
    const auto v = decode(idx);
    for (std::size_t i = 0; i < n; ++i) best[i] = std::min(best[i], v[i]);
  }
  if (dominated[encode(best)]) throw std::runtime_error("oracle: no least conductor in the box");
  return best;
}

}  // namespace oracle

namespace oracle {

std::string first_mismatch(const arfc::LipmanSequence& engine, const std::vector<Alg1Level>& reference) {
  if (engine.records.size() != reference.size()) {
    return "level count " + std::to_string(engine.records.size()) + " vs " + std::to_string(reference.size());
  }
  for (std::size_t m = 0; m < reference.size(); ++m) {
    const auto& rec = engine.records[m];
    const auto& ref = reference[m];
    const std::string at = "level " + std::to_string(m + 1) + ": ";
    if ((rec.blocks.size() == 1) != ref.local) return at + "locality differs";
    if (rec.blocks.size() != ref.mult_star.size()) return at + "block count differs";
    for (std::size_t b = 0; b < rec.blocks.size(); ++b) {
      const auto& blk = rec.blocks[b];
      if (blk.mult.vec != ref.mult_star[b]) return at + "mult* differs on block " + std::to_string(b);
      std::vector<CurveElement> gens = blk.generators.generators;
      if (!ref.local) {
        if (gens != ref.generators[b]) return at + "generators differ on block " + std::to_string(b);
      } else if (gens != ref.generators[0]) {
        return at + "generators differ";
      }
      if (blk.finished) {
        if (arfc::valuation(blk.embedded) != arfc::valuation(ref.minimal[b])) return at + "leaf valuation differs";
      } else if (!(blk.embedded == ref.minimal[b])) {
        return at + "minimal element differs on block " + std::to_string(b);
      }
    }
  }
  return {};
}

}  // namespace oracle
