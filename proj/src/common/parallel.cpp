#include "common/parallel.hpp"

#include <atomic>
#include <thread>

namespace qclab {

namespace {
std::atomic<int> g_threads{0};  // 0 = use hardware_concurrency

int effective_threads() {
  int n = g_threads.load();
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return n < 1 ? 1 : n;
}

constexpr std::int64_t kChunk = 1024;
}  // namespace

void set_thread_count(int n) { g_threads.store(n); }
int thread_count() { return effective_threads(); }

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
  const int workers = effective_threads();
  if (workers == 1 || n < 2 * kChunk) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  auto body = [&] {
    for (;;) {
      std::int64_t lo = next.fetch_add(kChunk);
      if (lo >= n) break;
      std::int64_t hi = std::min(lo + kChunk, n);
      for (std::int64_t i = lo; i < hi; ++i) fn(i);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
}

std::complex<double> parallel_sum(
    std::int64_t n, const std::function<std::complex<double>(std::int64_t)>& fn) {
  const std::int64_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<std::complex<double>> partial(static_cast<size_t>(chunks), 0.0);
  parallel_for(chunks, [&](std::int64_t c) {
    std::complex<double> acc = 0.0;
    const std::int64_t hi = std::min((c + 1) * kChunk, n);
    for (std::int64_t i = c * kChunk; i < hi; ++i) acc += fn(i);
    partial[static_cast<size_t>(c)] = acc;
  });
  std::complex<double> total = 0.0;
  for (auto v : partial) total += v;
  return total;
}

}  // namespace qclab
