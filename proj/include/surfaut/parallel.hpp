// surfaut - deterministic fan-out over index ranges.

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace surfaut::detail {

  // Splits [0, count) into `workers` contiguous blocks and runs
  // fn(block_index, begin, end) for each, concurrently when workers > 1.
  // Results that callers concatenate in block order are therefore
  // independent of the worker count.
  template <typename Fn>
  void parallel_blocks(std::size_t count, unsigned workers, Fn&& fn) {
    workers = std::max(1u, workers);
    std::size_t blocks = std::min<std::size_t>(workers, std::max<std::size_t>(count, 1));
    auto bound = [&](std::size_t b) { return count * b / blocks; };
    if (blocks == 1) {
      fn(std::size_t{0}, std::size_t{0}, count);
      return;
    }
    std::vector<std::exception_ptr> errors(blocks);
    {
      std::vector<std::jthread> threads;
      for (std::size_t b = 0; b < blocks; ++b) {
        threads.emplace_back([&, b] {
          try {
            fn(b, bound(b), bound(b + 1));
          } catch (...) {
            errors[b] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

}  // namespace surfaut::detail
