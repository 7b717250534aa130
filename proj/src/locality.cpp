#include "arfc/locality.hpp"

#include <cassert>

#include "arfc/errors.hpp"

namespace arfc {

bool is_local_pair(const Parametrization& p, std::size_t i, std::size_t j) {
  for (const auto& g : p.generators) {
    const bool ui = g[i].ord() == Ord(0);
    const bool uj = g[j].ord() == Ord(0);
    if (ui != uj) return false;
    if (ui && uj && g[i].constant_term() != g[j].constant_term()) return false;
  }
  return true;
}

bool is_local_pair(const Parametrization& p) {
  assert(p.n == 2);
  return is_local_pair(p, 0, 1);
}

std::vector<std::vector<bool>> locality_matrix(const Parametrization& p, ExecutionPolicy policy) {
  const std::size_t n = p.n;
  std::vector<std::vector<bool>> local(n, std::vector<bool>(n, true));
  std::vector<char> flat(n * n, 1);
  const long long total = static_cast<long long>(n * n);
  if (policy == ExecutionPolicy::parallel) {
#pragma omp parallel for schedule(dynamic) if (total > 16)
    for (long long idx = 0; idx < total; ++idx) {
      const std::size_t i = idx / n, j = idx % n;
      if (i < j) flat[idx] = is_local_pair(p, i, j) ? 1 : 0;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) flat[i * n + j] = is_local_pair(p, i, j) ? 1 : 0;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) local[i][j] = local[j][i] = flat[i * n + j] != 0;
  }
  return local;
}

Partition partition_from_matrix(const std::vector<std::vector<bool>>& local) {
  const std::size_t n = local.size();
  std::vector<bool> taken(n, false);
  Partition parts;
  for (std::size_t i = 0; i < n; ++i) {
    if (taken[i]) continue;
    Block b{i};
    taken[i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!taken[j] && local[i][j]) {
        b.push_back(j);
        taken[j] = true;
      }
    }
    parts.push_back(std::move(b));
  }

  std::vector<std::size_t> owner(n);
  for (std::size_t b = 0; b < parts.size(); ++b) {
    for (auto i : parts[b]) owner[i] = b;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (local[i][j] != (owner[i] == owner[j])) {
        throw Error(ErrorCode::InconsistentLocality,
                    "branches " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " break transitivity of the locality relation");
      }
    }
  }
  return parts;
}

Partition partition(const Parametrization& p, ExecutionPolicy policy) {
  return partition_from_matrix(locality_matrix(p, policy));
}

}  // namespace arfc
