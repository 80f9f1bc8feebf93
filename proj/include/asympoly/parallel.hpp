#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace asympoly {

// Worker count: ASYMPOLY_THREADS if set and positive, else the hardware count.
inline unsigned sweep_threads() {
  if (const char* env = std::getenv("ASYMPOLY_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Evaluates f(i) for i in [0, count) on a small pool; results keep index order.
template <class F>
auto parallel_map(std::size_t count, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> out(count);
  unsigned workers = std::min<std::size_t>(sweep_threads(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; !failed && (i = next++) < count;) {
        try {
          out[i] = f(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace asympoly
