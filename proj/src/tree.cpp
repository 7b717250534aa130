#include "arfc/tree.hpp"

#include <algorithm>
#include <cassert>
#include <exception>

#include "arfc/errors.hpp"

namespace arfc {

Exponent MultiplicityTree::mult(std::size_t i, std::size_t k) const {
  assert(k >= 1);
  const auto& s = sequences[i];
  return k <= s.size() ? s[k - 1] : 1;
}

std::size_t MultiplicityTree::length(std::size_t i) const {
  const auto& s = sequences[i];
  for (std::size_t k = s.size(); k >= 1; --k) {
    if (s[k - 1] != 1) return k;
  }
  return 1;
}

std::size_t MultiplicityTree::glued(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  return i < j ? ram[i][j] : ram[j][i];
}

std::size_t MultiplicityTree::last_glued(std::size_t i) const {
  std::size_t p = 0;
  for (std::size_t j = 0; j < n(); ++j) p = std::max(p, glued(i, j));
  return p;
}

std::size_t MultiplicityTree::depth() const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < n(); ++i) d = std::max({d, length(i), last_glued(i)});
  return d;
}

namespace {

// Classes of `within` under p_{i,j} >= m.
std::vector<Block> classes(const MultiplicityTree& t, const Block& within, std::size_t m) {
  std::vector<Block> out;
  for (auto i : within) {
    bool placed = false;
    for (auto& b : out) {
      if (t.glued(b.front(), i) >= m) {
        b.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) out.push_back({i});
  }
  return out;
}

Block all_branches(std::size_t n) {
  Block b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = i;
  return b;
}

void require_local(const MultiplicityTree& t) {
  for (std::size_t i = 0; i < t.n(); ++i) {
    for (std::size_t j = i + 1; j < t.n(); ++j) {
      if (t.glued(i, j) < 1) {
        throw Error(ErrorCode::NotLocal, "branches " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                             " are not glued at the root");
      }
    }
  }
}

using Nodes = std::vector<std::pair<Block, std::size_t>>;

// Shared recursion behind rooted_member and realizing_subtree.
bool descend(const MultiplicityTree& t, const Block& block, std::size_t m, SemigroupVector r, Nodes* out) {
  for (auto i : block) {
    const Exponent here = t.mult(i, m);
    if (r[i] < here) return false;
    r[i] -= here;
  }
  if (out) out->emplace_back(block, m);

  if (block.size() == 1) {
    const std::size_t i = block.front();
    const std::size_t l = t.length(i);
    std::size_t k = m + 1;
    while (r[i] > 0) {
      if (k > l && !out) return true;  // only 1s remain
      const Exponent step = t.mult(i, k);
      if (r[i] < step) return false;
      r[i] -= step;
      if (out) out->emplace_back(block, k);
      ++k;
    }
    return true;
  }

  for (const auto& child : classes(t, block, m + 1)) {
    std::size_t zeros = 0;
    for (auto i : child) zeros += r[i] == 0;
    if (zeros == child.size()) continue;
    if (zeros > 0) return false;
    SemigroupVector sub(r.size(), 0);
    for (auto i : child) sub[i] = r[i];
    if (!descend(t, child, m + 1, std::move(sub), out)) return false;
  }
  return true;
}

void add_bounded(std::vector<SemigroupVector>& acc, const std::vector<SemigroupVector>& opts,
                 const SemigroupVector& cap) {
  std::vector<SemigroupVector> next = acc;
  for (const auto& a : acc) {
    for (const auto& o : opts) {
      SemigroupVector s = a;
      bool ok = true;
      for (std::size_t i = 0; i < s.size() && ok; ++i) {
        s[i] += o[i];
        ok = s[i] <= cap[i];
      }
      if (ok) next.push_back(std::move(s));
    }
  }
  acc = std::move(next);
}

// All rooted subtree sums at (block, m) bounded by cap.
std::vector<SemigroupVector> rooted_sums(const MultiplicityTree& t, const Block& block, std::size_t m,
                                         const SemigroupVector& cap) {
  SemigroupVector base = t.node(block, m);
  for (auto i : block) {
    if (base[i] > cap[i]) return {};
  }
  if (block.size() == 1) {
    const std::size_t i = block.front();
    std::vector<SemigroupVector> out{base};
    for (std::size_t k = m + 1;; ++k) {
      base[i] += t.mult(i, k);
      if (base[i] > cap[i]) break;
      out.push_back(base);
    }
    return out;
  }
  std::vector<SemigroupVector> acc{base};
  for (const auto& child : classes(t, block, m + 1)) add_bounded(acc, rooted_sums(t, child, m + 1, cap), cap);
  return acc;
}

}  // namespace

std::vector<Block> MultiplicityTree::blocks_at(std::size_t m) const { return classes(*this, all_branches(n()), m); }

SemigroupVector MultiplicityTree::node(const Block& block, std::size_t m) const {
  SemigroupVector v(n(), 0);
  for (auto i : block) v[i] = mult(i, m);
  return v;
}

std::vector<Exponent> trim_sequence(std::vector<Exponent> m) {
  while (!m.empty() && m.back() == 1) m.pop_back();
  if (m.empty()) m.push_back(1);
  return m;
}

std::optional<std::size_t> s_index(const std::vector<Exponent>& m, std::size_t k) {
  auto at = [&](std::size_t j) -> Exponent { return j <= m.size() ? m[j - 1] : 1; };
  const Exponent target = at(k);
  Exponent sum = 0;
  for (std::size_t s = k + 1;; ++s) {
    sum += at(s);
    if (sum == target) return s;
    if (sum > target) return std::nullopt;
  }
}

MultiplicityTree build_tree(const LipmanSequence& seq) {
  const std::size_t n = seq.n;
  MultiplicityTree t;
  t.sequences.assign(n, {});
  t.ram.assign(n, std::vector<std::size_t>(n, 0));
  for (const auto& rec : seq.records) {
    for (const auto& b : rec.blocks) {
      for (auto i : b.block) t.sequences[i].push_back(b.mult.vec[i]);
      for (std::size_t x = 0; x < b.block.size(); ++x) {
        for (std::size_t y = x + 1; y < b.block.size(); ++y) {
          t.ram[b.block[x]][b.block[y]] = std::max(t.ram[b.block[x]][b.block[y]], rec.level);
        }
      }
    }
  }
  for (auto& s : t.sequences) s = trim_sequence(std::move(s));
  return t;
}

SemigroupVector conductor(const MultiplicityTree& t) {
  require_local(t);
  SemigroupVector c(t.n(), 0);
  if (t.n() == 1 && t.length(0) == 1 && t.mult(0, 1) == 1) return c;  // K[[t]] itself
  for (std::size_t i = 0; i < t.n(); ++i) {
    const std::size_t top = std::max(t.length(i), t.last_glued(i));
    for (std::size_t k = 1; k <= top; ++k) c[i] += t.mult(i, k);
  }
  return c;
}

bool rooted_member(const MultiplicityTree& t, const Block& block, std::size_t m, const SemigroupVector& v) {
  return descend(t, block, m, v, nullptr);
}

bool semigroup_member(const MultiplicityTree& t, const SemigroupVector& v) {
  require_local(t);
  if (std::all_of(v.begin(), v.end(), [](Exponent x) { return x == 0; })) return true;
  return descend(t, all_branches(t.n()), 1, v, nullptr);
}

std::vector<std::pair<Block, std::size_t>> realizing_subtree(const MultiplicityTree& t, const SemigroupVector& v) {
  require_local(t);
  Nodes nodes;
  if (!descend(t, all_branches(t.n()), 1, v, &nodes)) return {};
  std::stable_sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first.front() < b.first.front();
  });
  return nodes;
}

std::vector<SemigroupVector> small_elements(const MultiplicityTree& t) {
  const SemigroupVector c = conductor(t);
  auto out = rooted_sums(t, all_branches(t.n()), 1, c);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SemigroupVector> small_elements_by_scan(const MultiplicityTree& t, ExecutionPolicy policy) {
  const SemigroupVector c = conductor(t);
  const std::size_t n = t.n();
  std::size_t volume = 1;
  for (auto x : c) volume *= std::size_t(x) + 1;

  auto decode = [&](std::size_t idx) {
    SemigroupVector v(n);
    for (std::size_t i = n; i-- > 0;) {
      v[i] = Exponent(idx % (c[i] + 1));
      idx /= c[i] + 1;
    }
    return v;
  };

  std::vector<char> hit(volume, 0);
  const long long total = static_cast<long long>(volume);
  if (policy == ExecutionPolicy::parallel) {
#pragma omp parallel for schedule(static)
    for (long long idx = 1; idx < total; ++idx) hit[idx] = semigroup_member(t, decode(idx)) ? 1 : 0;
  } else {
    for (long long idx = 1; idx < total; ++idx) hit[idx] = semigroup_member(t, decode(idx)) ? 1 : 0;
  }

  // Index order of the box is lexicographic order of the vectors.
  std::vector<SemigroupVector> out;
  for (std::size_t idx = 1; idx < volume; ++idx) {
    if (hit[idx]) out.push_back(decode(idx));
  }
  return out;
}

TreeDiagnostic validate_tree(const MultiplicityTree& t) {
  const std::size_t n = t.n();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = t.sequences[i];
    if (s.empty() || std::find(s.begin(), s.end(), Exponent(0)) != s.end()) {
      return {false, "positive entries", "sequence " + std::to_string(i + 1) + " has a zero or no entries"};
    }
    for (std::size_t k = 1; k <= t.length(i); ++k) {
      if (!s_index(s, k)) {
        return {false, "multiplicity sequence",
                "M_" + std::to_string(i + 1) + "[" + std::to_string(k) + "] is not a sum of the following entries"};
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        std::size_t p[3] = {t.glued(i, j), t.glued(i, k), t.glued(j, k)};
        std::sort(p, p + 3);
        if (p[0] != p[1]) {
          return {false, "tree compatibility",
                  "branches " + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1)};
        }
      }
    }
  }
  const std::size_t depth = t.depth();
  for (std::size_t m = 1; m <= depth; ++m) {
    for (const auto& b : t.blocks_at(m)) {
      const SemigroupVector node = t.node(b, m);
      for (const auto& child : classes(t, b, m + 1)) {
        SemigroupVector sub(n, 0);
        for (auto i : child) sub[i] = node[i];
        if (!rooted_member(t, child, m + 1, sub)) {
          return {false, "subtree sum",
                  "node " + to_string(node) + " at level " + std::to_string(m) + " is not a sum below it"};
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (t.glued(i, j) < 1) {
        return {false, "local root",
                "branches " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are not glued at level 1"};
      }
    }
  }
  return {};
}

namespace {

bool dominates(const SemigroupVector& b, const SemigroupVector& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] < a[i]) return false;
  }
  return true;
}

template <class Member>
bool arf_closed(const std::vector<SemigroupVector>& small, Member member) {
  for (const auto& a : small) {
    std::vector<const SemigroupVector*> above;
    for (const auto& b : small) {
      if (dominates(b, a)) above.push_back(&b);
    }
    for (std::size_t x = 0; x < above.size(); ++x) {
      for (std::size_t y = x; y < above.size(); ++y) {
        SemigroupVector v(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) v[i] = (*above[x])[i] + (*above[y])[i] - a[i];
        if (!member(v)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool check_arf(const MultiplicityTree& t) {
  return arf_closed(small_elements(t), [&](const SemigroupVector& v) { return semigroup_member(t, v); });
}

bool check_arf(const std::vector<SemigroupVector>& small, const SemigroupVector& c) {
  std::vector<SemigroupVector> sorted = small;
  std::sort(sorted.begin(), sorted.end());
  return arf_closed(sorted, [&](SemigroupVector v) {
    bool zero = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = std::min(v[i], c[i]);
      zero = zero && v[i] == 0;
    }
    return zero || std::binary_search(sorted.begin(), sorted.end(), v);
  });
}

std::string to_string(const SemigroupVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace arfc
