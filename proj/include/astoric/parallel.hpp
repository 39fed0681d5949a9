#pragma once

#include <cstdint>

namespace astoric {

/// Execution policy for the enumeration kernels. Both policies produce
/// identical results in identical order; `serial` is the reference.
enum class Exec { serial, parallel };

/// Number of OpenMP threads the parallel kernels will use.
int worker_count();

}  // namespace astoric
