#pragma once

#include <exception>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace kunzsg {

inline int max_threads()
{
#if defined(_OPENMP)
    return ::omp_get_max_threads();
#else
    return 1;
#endif
}

inline bool in_parallel()
{
#if defined(_OPENMP)
    return ::omp_in_parallel();
#else
    return false;
#endif
}

/// Runs f(i) for i in [begin, end). Iterations must write only to their own
/// output slots; results are then independent of the schedule. The first
/// exception thrown by any iteration is rethrown after the loop.
template <class Index, class F>
void parallel_for(Index begin, Index end, F&& f)
{
#if defined(_OPENMP)
    if (!in_parallel() && max_threads() > 1) {
        std::exception_ptr failure;
        #pragma omp parallel for schedule(dynamic)
        for (Index i = begin; i < end; ++i) {
            try {
                f(i);
            } catch (...) {
                #pragma omp critical(kunzsg_parallel_for)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        return;
    }
#endif
    for (Index i = begin; i < end; ++i) f(i);
}

}  // namespace kunzsg
