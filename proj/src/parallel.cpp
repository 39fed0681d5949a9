#include "astoric/parallel.hpp"

#include <omp.h>

namespace astoric {

int worker_count() { return omp_get_max_threads(); }

}  // namespace astoric
