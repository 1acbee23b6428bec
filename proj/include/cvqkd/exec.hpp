#pragma once

namespace cvqkd {

// Execution policy for grid kernels. `serial` is the reference loop;
// `parallel` distributes independent output cells over OpenMP threads.
// Kernels only ever parallelize writes to disjoint slots and keep every
// reduction in a fixed serial order, so the two policies produce
// bit-identical results.
enum class Exec { serial, parallel };

template <typename F>
void for_each_index(Exec exec, int n, F&& body) {
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
#else
    (void)exec;
#endif
    for (int i = 0; i < n; ++i) {
        body(i);
    }
}

}  // namespace cvqkd
