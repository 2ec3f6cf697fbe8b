#include <doctest.h>

#include "ydc/kernels.hpp"

using namespace ydc;

TEST_CASE("parallel columns match the serial reference") {
  kernels::set_threads(4);
  Scalar q = Scalar::zeta(CycField::get(7));
  auto f = [&](std::size_t i) {
    Vec v;
    for (std::size_t k = 0; k <= i % 5; ++k) v.add((i * 3 + k) % 17, q.pow(static_cast<long>(i + k)));
    return v;
  };
  CHECK(kernels::columns(200, f) == kernels::serial::columns(200, f));
}

TEST_CASE("first failure is the smallest failing index") {
  kernels::set_threads(4);
  auto ok = [](std::size_t i) { return i % 37 != 36 && i != 500; };
  CHECK(kernels::first_failure(1000, ok) == std::optional<std::size_t>(36));
  CHECK(kernels::serial::first_failure(1000, ok) == std::optional<std::size_t>(36));
  CHECK_FALSE(kernels::first_failure(30, ok).has_value());
}

TEST_CASE("exceptions inside parallel sweeps propagate") {
  kernels::set_threads(4);
  auto f = [](std::size_t i) -> Vec {
    if (i == 7) throw std::runtime_error("boom");
    return Vec::basis(i);
  };
  CHECK_THROWS_AS(kernels::columns(20, f), std::runtime_error);
}
