#pragma once

namespace leibniz::kernels {

/// Which variant of a data-parallel kernel to run. Both produce identical results;
/// the serial path is kept as the reference the parallel one is tested against.
enum class Execution { Serial, Parallel };

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace leibniz::kernels
