#ifndef ZS_PARALLEL_HPP
#define ZS_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zs {

// Per-element map over [0, n). Elements are independent; results must be
// written to preallocated storage so that a later serial reduction is
// deterministic regardless of thread count.
template <class F>
void parallel_map(std::size_t n, F&& f) {
#ifdef _OPENMP
    std::exception_ptr err;
    std::mutex err_mu;
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            f(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
#else
    for (std::size_t i = 0; i < n; ++i) f(i);
#endif
}

// Reference loop for testing and benchmarking against parallel_map.
template <class F>
void serial_map(std::size_t n, F&& f) {
    for (std::size_t i = 0; i < n; ++i) f(i);
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

}  // namespace zs

#endif
