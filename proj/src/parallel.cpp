#include "hk/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hk {

namespace {

unsigned threads_from_env() {
  const char* value = std::getenv(kThreadsEnvVar);
  if (value == nullptr) return 1;
  try {
    const long parsed = std::stol(value);
    return parsed > 0 ? static_cast<unsigned>(parsed) : 1;
  } catch (...) {
    return 1;
  }
}

std::atomic<unsigned>& threads_setting() {
  static std::atomic<unsigned> setting{threads_from_env()};
  return setting;
}

}  // namespace

unsigned thread_count() { return threads_setting().load(); }

void set_thread_count(unsigned threads) { threads_setting().store(std::max(1u, threads)); }

std::size_t chunk_count(std::size_t count) {
  return std::max<std::size_t>(1, std::min<std::size_t>(count, thread_count()));
}

void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  const std::size_t chunks = chunk_count(count);
  auto bounds = [&](std::size_t c) { return count * c / chunks; };
  if (chunks == 1) {
    body(0, 0, count);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  auto run = [&](std::size_t c) {
    try {
      body(c, bounds(c), bounds(c + 1));
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks - 1);
    for (std::size_t c = 1; c < chunks; ++c) workers.emplace_back(run, c);
    run(0);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

}  // namespace hk
