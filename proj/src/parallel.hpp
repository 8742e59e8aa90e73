#pragma once

#include <cstdint>
#include <exception>

namespace frobenius::detail {

// Runs fn(i) for i in [0, n) across OpenMP threads. The first exception
// thrown by any iteration is rethrown on the calling thread.
template <class Fn>
void parallel_for(std::int64_t n, Fn&& fn)
{
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; i++) {
        try {
            fn(i);
        } catch (...) {
#pragma omp critical(frobenius_parallel_error)
            {
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

template <class Fn>
void serial_for(std::int64_t n, Fn&& fn)
{
    for (std::int64_t i = 0; i < n; i++) {
        fn(i);
    }
}

} // namespace frobenius::detail
