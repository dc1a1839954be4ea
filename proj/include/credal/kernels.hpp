#pragma once

// Loop kernels with a serial reference and an OpenMP version. Results never
// depend on the execution mode: outputs are stored by index and "first"
// always means the smallest index.

#include "credal/previsions.hpp"

#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <vector>

namespace credal {

enum class Exec { serial, parallel };

/// Process-wide default; the CLI and tests may switch it.
Exec default_exec();
void set_default_exec(Exec exec);

int max_threads();

namespace detail {

class ExceptionSlot {
 public:
  void capture() {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!error_) error_ = std::current_exception();
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

}  // namespace detail

/// out[i] = fn(i) for i < n.
template <typename T, typename F>
std::vector<T> map_indices(std::size_t n, F&& fn, Exec exec = default_exec()) {
  std::vector<std::optional<T>> slots(n);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) slots[i].emplace(fn(i));
  } else {
    detail::ExceptionSlot error;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
      try {
        slots[static_cast<std::size_t>(i)].emplace(fn(static_cast<std::size_t>(i)));
      } catch (...) {
        error.capture();
      }
    }
    error.rethrow();
  }
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Smallest i < n with pred(i), or nullopt. The parallel version skips
/// indices above the best hit found so far.
template <typename F>
std::optional<std::size_t> first_index_where(std::size_t n, F&& pred, Exec exec = default_exec()) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{none};
  detail::ExceptionSlot error;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    if (i > best.load(std::memory_order_relaxed)) continue;
    try {
      if (pred(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
  if (best.load() == none) return std::nullopt;
  return best.load();
}

/// Lower previsions of a batch of gambles.
RationalVector lower_envelope_batch(const CredalSet& model, const std::vector<Gamble>& gambles,
                                    Exec exec = default_exec());

}  // namespace credal
