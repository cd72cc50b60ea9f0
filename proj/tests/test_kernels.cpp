#include <doctest.h>

#include <cmath>
#include <random>

#include "trigprod/kernels.hpp"

using namespace trigprod;

namespace {

double fejer_by_sum(std::int64_t n, double theta) {
  double total = 1.0;
  for (std::int64_t j = 1; j < n; ++j) {
    total += 2.0 * (1.0 - static_cast<double>(j) / static_cast<double>(n)) *
             std::cos(2.0 * kPi * static_cast<double>(j) * theta);
  }
  return total;
}

}  // namespace

TEST_CASE("angle reduction") {
  CHECK(Angle(0.25).value == doctest::Approx(0.25));
  CHECK(Angle(1.25).value == doctest::Approx(0.25));
  CHECK(Angle(-0.75).value == doctest::Approx(0.25));
  CHECK(Angle(3.0).value == 0.0);
  CHECK(Angle(-1e-20).value < 1.0);

  // Large multiples keep full precision through the FMA split. Oracle: theta
  // is an exact dyadic rational p/2^k, so a*theta mod 1 is exact in integers.
  const Angle t(0.1234567890123456);
  const std::int64_t a = 1000003;
  int exp2 = 0;
  const double mantissa = std::frexp(t.value, &exp2);
  const auto p = static_cast<unsigned __int128>(std::ldexp(mantissa, 53));
  const int shift = 53 - exp2;  // theta = p / 2^shift
  const unsigned __int128 denom = static_cast<unsigned __int128>(1) << shift;
  const unsigned __int128 rem = static_cast<unsigned __int128>(a) * p % denom;
  const double exact = static_cast<double>(static_cast<long double>(rem) /
                                           static_cast<long double>(denom));
  const Angle reduced = Angle::from_multiple(a, t);
  CHECK(std::abs(reduced.value - exact) < 1e-15);
}

TEST_CASE("log_abs_one_minus examples") {
  CHECK(log_abs_one_minus(Angle(0.5)) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(log_abs_one_minus(Angle(1.0 / 6.0)) == doctest::Approx(0.0).scale(1).epsilon(1e-14));
  CHECK(log_abs_one_minus(Angle(0.25)) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log_abs_one_minus(Angle(0.0)), SingularPoint);
  CHECK_THROWS_AS(log_abs_one_minus(Angle(1.0 - 0x1p-54)), SingularPoint);
}

TEST_CASE("log_abs_one_minus symmetry") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pick(1e-9, 1.0 - 1e-9);
  for (int i = 0; i < 20000; ++i) {
    const double theta = pick(rng);
    const double a = log_abs_one_minus(Angle(theta));
    const double b = log_abs_one_minus(Angle(1.0 - theta));
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("fejer kernel examples") {
  for (std::int64_t n : {1, 2, 5, 17, 1000}) {
    CHECK(fejer_kernel(n, Angle(0.0)) == doctest::Approx(static_cast<double>(n)));
  }
  CHECK(fejer_kernel(2, Angle(0.5)) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
  // n = 3, theta = 1/3: direct evaluation of the defining sum.
  CHECK(fejer_by_sum(3, 1.0 / 3.0) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
  CHECK(fejer_kernel(3, Angle(1.0 / 3.0)) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
}

TEST_CASE("fejer kernel matches the cosine sum and stays nonnegative") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::int64_t> pick_n(1, 1000);
  std::uniform_real_distribution<double> pick_theta(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t n = pick_n(rng);
    const double theta = pick_theta(rng);
    const double closed = fejer_kernel(n, Angle(theta));
    CHECK(closed >= -1e-9 * static_cast<double>(n));
    const double by_sum = fejer_by_sum(n, theta);
    CHECK(closed == doctest::Approx(by_sum).epsilon(1e-9).scale(static_cast<double>(n)));
  }
  // Quick nonnegativity sweep at higher volume (closed form only).
  for (int i = 0; i < 100000; ++i) {
    const std::int64_t n = pick_n(rng);
    const double v = fejer_kernel(n, Angle(pick_theta(rng)));
    CHECK(v >= -1e-9 * static_cast<double>(n));
  }
}

TEST_CASE("fejer kernel mean over a full period grid is 1") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> pick_n(1, 400);
  for (int rep = 0; rep < 50; ++rep) {
    const std::int64_t n = pick_n(rng);
    const std::int64_t grid = 4 * n;
    double mean = 0.0;
    for (std::int64_t g = 0; g < grid; ++g) {
      mean += fejer_kernel(n, Angle::from_grid_index(static_cast<std::uint64_t>(g),
                                                     static_cast<std::uint64_t>(grid)));
    }
    mean /= static_cast<double>(grid);
    CHECK(mean == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("dirichlet kernel examples") {
  for (std::int64_t n : {1, 3, 10, 1000}) {
    CHECK(dirichlet_kernel(n, 0.0) == doctest::Approx(static_cast<double>(2 * n + 1)));
    CHECK(dirichlet_kernel(n, 4.0 * kPi) == doctest::Approx(static_cast<double>(2 * n + 1)));
  }
  CHECK(dirichlet_kernel(1, kPi) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(dirichlet_kernel(4, 2.0 * kPi / 9.0) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
}

TEST_CASE("dirichlet kernel vs the partial cosine sum") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<std::int64_t> pick_n(1, 1000);
  std::uniform_real_distribution<double> pick_x(-10.0, 10.0);
  int checked = 0;
  while (checked < 1000) {
    const std::int64_t n = pick_n(rng);
    const double x = pick_x(rng);
    if (std::abs(std::sin(0.5 * x)) < 1e-3) continue;  // keep the ratio well-conditioned
    ++checked;
    double sum = 0.0;
    for (std::int64_t j = 1; j <= n; ++j) sum += std::cos(static_cast<double>(j) * x);
    const double d = dirichlet_kernel(n, x);
    CHECK(2.0 * sum == doctest::Approx(d - 1.0).epsilon(1e-9).scale(std::max(1.0, std::abs(d))));
  }
}

TEST_CASE("log_table values and sentinel") {
  const auto t2 = log_table(GridSpec{2});
  CHECK(std::isinf(t2[0]));
  CHECK(t2[0] < 0);
  CHECK(t2[1] == doctest::Approx(std::log(2.0)).epsilon(1e-14));

  const auto t4 = log_table(GridSpec{4});
  CHECK(t4[1] == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-14));
  CHECK(t4[3] == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-14));
  CHECK(t4[2] == doctest::Approx(std::log(2.0)).epsilon(1e-14));

  const auto t6 = log_table(GridSpec{6});
  CHECK(t6[1] == doctest::Approx(0.0).scale(1).epsilon(1e-14));

  // Table entries reuse the direct evaluation path bit for bit.
  const auto table = log_table(GridSpec{1024});
  for (std::size_t m : {1u, 5u, 511u, 512u, 1023u}) {
    CHECK(table[m] == log_abs_one_minus(Angle::from_grid_index(m, 1024)));
  }

  CHECK_THROWS_AS(log_table(GridSpec{1}), InputError);
  CHECK_THROWS_AS(log_table(GridSpec{std::size_t{1} << 30}), AllocationCap);
}
