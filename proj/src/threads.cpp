#include "disclab/threads.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace disclab {

std::size_t thread_budget() {
  if (const char* env = std::getenv("DISCLAB_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<std::size_t>(v);
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void run_jobs(std::size_t njobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min(thread_budget(), njobs);
  if (workers <= 1) {
    for (std::size_t j = 0; j < njobs; ++j) fn(j);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t tid = 0; tid < workers; ++tid) {
    pool.emplace_back([&, tid] {
      for (std::size_t j = tid; j < njobs; j += workers) {
        try {
          fn(j);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace disclab
