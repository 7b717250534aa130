#pragma once

namespace arfc {

/// Selects between the OpenMP kernels and their serial references. Builds
/// without OpenMP run the parallel variants serially.
enum class ExecutionPolicy { serial, parallel };

bool openmp_enabled() noexcept;

}  // namespace arfc
