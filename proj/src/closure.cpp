#include "arfc/closure.hpp"

#include <cassert>
#include <exception>

#include "arfc/errors.hpp"

namespace arfc {

MinimalTree minimal_tree(const LipmanSequence& seq) {
  MinimalTree mt{seq.n, {}};
  for (const auto& rec : seq.records) {
    std::vector<MinimalNode> level;
    for (const auto& b : rec.blocks) level.push_back({b.block, rec.level, b.embedded});
    mt.levels.push_back(std::move(level));
  }
  return mt;
}

CurveElement MinimalTree::at(const Block& block, std::size_t m) const {
  if (m >= 1 && m <= levels.size()) {
    for (const auto& node : levels[m - 1]) {
      if (node.block == block) return node.element;
    }
  }
  assert(block.size() == 1);
  return embed(CurveElement({SeriesFraction(Polynomial::monomial(1, 1))}), block, n);
}

ClosurePresentation presentation(const MinimalTree& mt, const MultiplicityTree& t,
                                 [[maybe_unused]] ExecutionPolicy policy) {
  ClosurePresentation out;
  out.conductor = conductor(t);
  const auto& c = out.conductor;
  std::vector<SemigroupVector> targets;
  for (auto& v : small_elements(t)) {
    if (v != c) targets.push_back(std::move(v));
  }

  out.basis.resize(targets.size());
  std::vector<std::exception_ptr> errors(targets.size());
  const long long count = static_cast<long long>(targets.size());
#pragma omp parallel for schedule(dynamic) if (policy == ExecutionPolicy::parallel && count > 1)
  for (long long k = 0; k < count; ++k) {
    try {
      const auto& v = targets[k];
      const auto nodes = realizing_subtree(t, v);
      assert(!nodes.empty());
      std::vector<SeriesFraction> prod(t.n(), SeriesFraction::constant(1));
      for (const auto& [block, level] : nodes) {
        const CurveElement e = mt.at(block, level);
        for (auto i : block) prod[i] = prod[i] * e[i];
      }
      BasisEntry entry{v, {}};
      for (std::size_t i = 0; i < t.n(); ++i) {
        Polynomial p = expand_to_cap(prod[i], c[i]);
        const bool ok = v[i] < c[i] ? p.ord() == Ord(v[i]) : p.is_zero();
        if (!ok) {
          throw Error(ErrorCode::SelectionFailed,
                      "representative of " + to_string(v) + " has order " + p.ord().to_string() + " on branch " +
                          std::to_string(i + 1));
        }
        entry.coords.push_back(std::move(p));
      }
      out.basis[k] = std::move(entry);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace arfc
