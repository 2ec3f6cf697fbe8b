#pragma once

// Data-parallel sweeps. Each kernel has an OpenMP version and a serial
// reference with identical, deterministic results.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ydc/linspace.hpp"

namespace ydc::kernels {

void set_threads(int n);
int threads();

std::vector<Vec> columns(std::size_t n, const std::function<Vec(std::size_t)>& f);
// Smallest index i < n with ok(i) false.
std::optional<std::size_t> first_failure(std::size_t n, const std::function<bool(std::size_t)>& ok);

namespace serial {
std::vector<Vec> columns(std::size_t n, const std::function<Vec(std::size_t)>& f);
std::optional<std::size_t> first_failure(std::size_t n, const std::function<bool(std::size_t)>& ok);
}  // namespace serial

}  // namespace ydc::kernels
