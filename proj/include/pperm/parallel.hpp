#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace pperm {

/// Runs fn(part) for part = 0..parts-1 on up to `jobs` threads and returns
/// the results indexed by part, so any fold over them in index order is
/// independent of the thread count.
template <class Result, class Fn>
std::vector<Result> run_partitioned(std::size_t parts, unsigned jobs, Fn&& fn) {
  std::vector<Result> out(parts);
  if (jobs <= 1 || parts <= 1) {
    for (std::size_t p = 0; p < parts; ++p) out[p] = fn(p);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(parts);
  auto worker = [&] {
    for (std::size_t p = next++; p < parts; p = next++) {
      try {
        out[p] = fn(p);
      } catch (...) {
        errors[p] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(jobs, parts));
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace pperm
