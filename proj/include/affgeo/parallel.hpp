#pragma once
// Work spread over a few threads by an atomic counter; body(i) writes only its own slot.

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace affgeo {

template <typename Body>
void parallel_for(int n, int threads, Body&& body) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, std::max(n, 1));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i; (i = next.fetch_add(1)) < n;) body(i);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace affgeo
