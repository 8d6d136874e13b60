#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace sgf::detail {

// Runs work(b, first, count) for every block b of [0, n) with `threads`
// workers; each block writes only its own slot of the result vector.
template <class Partial, class Work>
std::vector<Partial> run_blocks(long n, long block, int threads, Work work) {
  const long blocks = (n + block - 1) / block;
  std::vector<Partial> out(static_cast<std::size_t>(blocks));
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long b; (b = next.fetch_add(1)) < blocks;) {
      const long first = b * block;
      out[static_cast<std::size_t>(b)] = work(b, first, std::min(block, n - first));
    }
  };
  const int t = std::max(1, std::min<int>(threads, static_cast<int>(blocks)));
  std::vector<std::thread> pool;
  for (int i = 1; i < t; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace sgf::detail
