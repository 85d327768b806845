#ifndef APEXION_PARALLEL_HPP
#define APEXION_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace apexion {

/// Resolves a worker count: explicit value, else APEXION_THREADS, else 1.
int resolve_threads(int requested);

/// Applies fn(i) for i in [0, count) across workers. Blocks until done.
/// fn must be safe to call concurrently for distinct indices.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace apexion

#endif
