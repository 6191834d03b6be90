#include "semico/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace semico {

namespace {

std::atomic<unsigned> override_count{0};

}  // namespace

unsigned thread_count() {
  if (unsigned n = override_count.load()) return n;
  if (const char* env = std::getenv("SEMICO_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void set_thread_count(unsigned n) { override_count.store(n); }

void parallel_chunks(std::size_t n, std::size_t chunks,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  if (chunks == 0) chunks = 1;
  auto bounds = [&](std::size_t c) { return n * c / chunks; };
  const std::size_t workers = std::min<std::size_t>(thread_count(), chunks);
  if (workers <= 1 || n < 2) {
    for (std::size_t c = 0; c < chunks; ++c) body(c, bounds(c), bounds(c + 1));
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) {
        try {
          body(c, bounds(c), bounds(c + 1));
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace semico
