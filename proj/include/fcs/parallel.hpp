#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fcs {

enum class Exec { Serial, Parallel };

// Runs body(i) for i in [0, n). Parallel mode uses OpenMP when compiled in
// (falling back to the serial loop otherwise); bodies must write only to
// their own slots. Exceptions are captured inside the loop and the first one
// rethrown after the join, since they must not cross a parallel region.
template <typename Body>
void parallel_for(std::size_t n, Exec exec, Body&& body) {
#ifdef _OPENMP
    if (exec == Exec::Parallel) {
        std::exception_ptr error = nullptr;
        const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < count; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace fcs
