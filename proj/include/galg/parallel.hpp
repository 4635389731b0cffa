#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace galg {

/// Runs body(begin, end) over `jobs` contiguous chunks of [0, count) and
/// returns the per-chunk results in chunk order, so merged output does not
/// depend on the number of workers. The first exception thrown (in chunk
/// order) is rethrown.
template <class Body>
auto parallel_chunks(std::size_t count, std::size_t jobs, Body body)
    -> std::vector<decltype(body(std::size_t{}, std::size_t{}))> {
  using Result = decltype(body(std::size_t{}, std::size_t{}));
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  std::vector<Result> results(jobs);
  if (jobs == 1) {
    results[0] = body(0, count);
    return results;
  }
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) {
      const std::size_t begin = count * j / jobs, end = count * (j + 1) / jobs;
      workers.emplace_back([&, j, begin, end] {
        try {
          results[j] = body(begin, end);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

/// Maps fn over [0, count) in parallel; output is indexed like the input.
template <class Fn>
auto parallel_map(std::size_t count, std::size_t jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  auto chunks = parallel_chunks(count, jobs, [&](std::size_t begin, std::size_t end) {
    std::vector<Result> part;
    part.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) part.push_back(fn(i));
    return part;
  });
  std::vector<Result> out;
  out.reserve(count);
  for (auto& part : chunks)
    for (auto& r : part) out.push_back(std::move(r));
  return out;
}

}  // namespace galg
