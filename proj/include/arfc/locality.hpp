#pragma once

// Local/product decomposition of a parametrized ring.

#include <vector>

#include "arfc/curve.hpp"
#include "arfc/parallel.hpp"

namespace arfc {

using Partition = std::vector<Block>;

/// For n == 2: false iff some generator has exactly one unit coordinate, or
/// both coordinates units with different constant terms.
bool is_local_pair(const Parametrization& p);

/// is_local_pair on the projection to branches (i, j), without copying.
bool is_local_pair(const Parametrization& p, std::size_t i, std::size_t j);

/// Symmetric n x n matrix of pairwise locality (diagonal true).
std::vector<std::vector<bool>> locality_matrix(const Parametrization& p,
                                               ExecutionPolicy policy = ExecutionPolicy::parallel);

/// Greedy sweep over the locality matrix; blocks sorted, ordered by least
/// element. Throws InconsistentLocality if the relation is not transitive.
Partition partition(const Parametrization& p, ExecutionPolicy policy = ExecutionPolicy::parallel);
Partition partition_from_matrix(const std::vector<std::vector<bool>>& local);

}  // namespace arfc
