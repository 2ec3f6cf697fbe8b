#include "ydc/kernels.hpp"

#include <exception>
#include <limits>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ydc::kernels {

namespace {
int g_threads = 0;
}

void set_threads(int n) {
  g_threads = n;
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#endif
}

int threads() {
#ifdef _OPENMP
  return g_threads > 0 ? g_threads : omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Vec> columns(std::size_t n, const std::function<Vec(std::size_t)>& f) {
  if (threads() <= 1 || n < 2) return serial::columns(n, f);
  std::vector<Vec> out(n);
  std::exception_ptr err;
  std::mutex mu;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < count; ++i) {
    try {
      out[i] = f(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

std::optional<std::size_t> first_failure(std::size_t n, const std::function<bool(std::size_t)>& ok) {
  if (threads() <= 1 || n < 2) return serial::first_failure(n, ok);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::exception_ptr err;
  std::mutex mu;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < count; ++i) {
    try {
      if (!ok(static_cast<std::size_t>(i))) {
        std::lock_guard<std::mutex> lock(mu);
        if (static_cast<std::size_t>(i) < best) best = static_cast<std::size_t>(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

namespace serial {

std::vector<Vec> columns(std::size_t n, const std::function<Vec(std::size_t)>& f) {
  std::vector<Vec> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

std::optional<std::size_t> first_failure(std::size_t n, const std::function<bool(std::size_t)>& ok) {
  for (std::size_t i = 0; i < n; ++i)
    if (!ok(i)) return i;
  return std::nullopt;
}

}  // namespace serial

}  // namespace ydc::kernels
