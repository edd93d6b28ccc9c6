#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace qclab {

// Process-wide worker count for parallel sweeps (1 = serial).
void set_thread_count(int n);
int thread_count();

// Runs fn(i) for i in [0, n). Work is split into fixed-size chunks handed to
// workers; fn must only write to locations owned by index i so results do not
// depend on the number of threads.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

// Ordered reduction: sums fn(i) over i in [0, n) with a fixed chunking
// (1024 items) and combines partial sums in ascending chunk order, which makes
// the floating-point result independent of the thread count.
std::complex<double> parallel_sum(
    std::int64_t n, const std::function<std::complex<double>(std::int64_t)>& fn);

}  // namespace qclab
