#pragma once

#include <cstdint>

namespace qcpl {

// Execution policy for the data-parallel kernels. The parallel path is OpenMP;
// the serial path is the reference used by tests and the benchmark. Kernels
// write only to slots indexed by the loop variable and reduce afterwards, so
// both paths produce bit-identical results.
enum class Exec { Serial, Parallel };

template <class F>
void for_each_index(std::int64_t n, F&& fn, Exec exec = Exec::Parallel) {
    if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
#endif
    }
    for (std::int64_t i = 0; i < n; ++i) fn(i);
}

}  // namespace qcpl
