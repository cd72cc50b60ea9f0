#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "support.hpp"
#include "trigprod/numtheory.hpp"
#include "trigprod/product.hpp"
#include "trigprod/spectra.hpp"

using namespace trigprod;

namespace {

FrequencySet make_set(std::initializer_list<std::int64_t> xs) {
  return FrequencySet(std::vector<std::int64_t>(xs));
}

}  // namespace

TEST_CASE("cosine-sum coefficient") {
  CHECK(cos_sum_coefficient(make_set({1, 2, 3}), 2) == Rational(1, 2));
  CHECK(cos_sum_coefficient(make_set({2}), 3) == Rational(0));
  CHECK(cos_sum_coefficient(make_set({5}), -5) == Rational(1, 2));
  CHECK(cos_sum_coefficient(make_set({5}), 0) == Rational(0));
}

TEST_CASE("log-product coefficient") {
  CHECK(log_product_coefficient(make_set({1}), 1) == Rational(-1, 2));
  CHECK(log_product_coefficient(make_set({1, 2}), 2) == Rational(-3, 4));
  CHECK(log_product_coefficient(make_set({1, 2}), -2) == Rational(-3, 4));
  CHECK(log_product_coefficient(make_set({4, 9, 100}), 0) == Rational(0));
  CHECK(log_product_coefficient(make_set({3}), 5) == Rational(0));
}

TEST_CASE("mobius-inverted coefficient worked examples") {
  {
    const auto c = mobius_inverted_coeff(make_set({1, 2, 3}), 2, 2);
    CHECK(c.H_hat == Rational(-1, 2));
    CHECK(c.f_hat == Rational(1, 2));
    CHECK(c.G_hat == Rational(0));
  }
  {
    const auto c = mobius_inverted_coeff(make_set({1, 2, 3}), 6, 2);
    CHECK(c.H_hat == Rational(-1, 6));
    CHECK(c.f_hat == Rational(0));
    CHECK(c.G_hat == Rational(-1, 6));
    // Every divisor with tail index above the cutoff enters the bound, so the
    // a=1 term (whose exact bracket happens to vanish) still contributes 1/3.
    CHECK(c.G_hat_bound == Rational(2, 3));
    CHECK(abs(c.G_hat) <= Rational(1, 3));
  }
  {
    const auto c = mobius_inverted_coeff(make_set({5}), 5, 1);
    CHECK(c.H_hat == Rational(-1, 2));
    CHECK(c.G_hat == Rational(0));
  }
}

TEST_CASE("tail coefficient worked examples") {
  CHECK(tail_coefficient(make_set({1, 2, 3}), 6, 2) == Rational(-1, 6));
  CHECK(tail_coefficient(make_set({1, 2, 3}), 2, 2) == Rational(0));
  CHECK(tail_coefficient(make_set({1}), 4, 2) == Rational(0));
  CHECK(tail_coefficient_bound(make_set({1, 2, 3}), 6, 2) == Rational(2, 3));
  CHECK(tail_coefficient_bound(make_set({1}), 4, 2) == Rational(1, 4));
  CHECK(tail_coefficient_bound(make_set({7}), 6, 2) == Rational(0));
}

TEST_CASE("exact identity H + f = G and the omega bound") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<std::int64_t> pick_t(1, 600);
  std::uniform_int_distribution<std::int64_t> pick_r(1, 20);
  for (int rep = 0; rep < 500; ++rep) {
    const FrequencySet set = testsupport::random_set(rng, 60, 100000, 10);
    const std::int64_t t = pick_t(rng);
    const std::int64_t r = pick_r(rng);
    const auto c = mobius_inverted_coeff(set, t, r);
    const Rational g = tail_coefficient(set, t, r);
    CHECK(c.H_hat + c.f_hat == g);
    CHECK(c.G_hat == g);
    CHECK(abs(g) <= c.G_hat_bound);
  }
}

TEST_CASE("coefficients at set frequencies drift to -1/2") {
  // For S = {1..n} and t in S: H_hat = -1/2 + G_hat with |G_hat| bounded
  // exactly; the maximal |H_hat + 1/2| over t in S shrinks as r grows.
  std::vector<std::int64_t> elements;
  for (std::int64_t i = 1; i <= 30; ++i) elements.push_back(i);
  const FrequencySet set(std::move(elements));
  Rational previous_max(-1);
  for (std::int64_t r : {1, 4, 16}) {
    Rational worst(0);
    for (const std::int64_t t : set) {
      const auto c = mobius_inverted_coeff(set, t, r);
      CHECK(c.f_hat == Rational(1, 2));
      const Rational drift = abs(c.H_hat + Rational(1, 2));
      CHECK(drift <= c.G_hat_bound);
      if (drift > worst) worst = drift;
    }
    MESSAGE("r=", r, " max |H_hat + 1/2| = ", to_fraction_string(worst));
    previous_max = worst;
  }
}

TEST_CASE("fraction strings") {
  CHECK(to_fraction_string(Rational(-1, 6)) == "-1/6");
  CHECK(to_fraction_string(Rational(0)) == "0");
  CHECK(to_fraction_string(Rational(3)) == "3");
  CHECK(to_fraction_string(Rational(2, 4)) == "1/2");
}

TEST_CASE("quadrature projection agrees with the exact coefficient") {
  // H(theta) = sum_{d<=r squarefree} mu(d)/d F_S(d theta), projected onto
  // e(t theta) on an offset lattice (g + phi)/G. The dyadic-odd offset keeps
  // every node nonsingular and the aliased tail alternates, so the projection
  // converges at rate ~1/G.
  const FrequencySet set = make_set({1, 2, 3});
  const std::int64_t t = 6, r = 2;
  const auto exact = mobius_inverted_coeff(set, t, r);

  const std::size_t grid = std::size_t{1} << 24;
  const double phi = 0.5 + 0x1p-51;  // odd numerator: no node is ever singular
  std::complex<double> acc(0.0, 0.0);
  std::vector<std::int64_t> ds;
  for (std::int64_t d = 1; d <= r; ++d) {
    if (mobius(d) != 0) ds.push_back(d);
  }
  for (std::size_t g = 0; g < grid; ++g) {
    const double theta = (static_cast<double>(g) + phi) / static_cast<double>(grid);
    double h = 0.0;
    for (const std::int64_t d : ds) {
      h += static_cast<double>(mobius(d)) / static_cast<double>(d) *
           eval_F(set, Angle::from_multiple(d, Angle(theta)));
    }
    const double ang = -2.0 * kPi * static_cast<double>(t) * theta;
    acc += h * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  acc /= static_cast<double>(grid);
  const double expected = exact.H_hat.convert_to<double>();
  CHECK(std::abs(acc.real() - expected) < 1e-6);
  CHECK(std::abs(acc.imag()) < 1e-6);
}

TEST_CASE("spot check the inversion sum against direct evaluation") {
  // The trigonometric sum itself (not just its coefficients) must match the
  // assembled series at generic angles.
  const FrequencySet set = make_set({1, 2, 3});
  const std::int64_t r = 2;
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> pick(0.01, 0.99);
  for (int i = 0; i < 50; ++i) {
    const double theta = pick(rng);
    double h = 0.0;
    bool singular = false;
    for (std::int64_t d = 1; d <= r; ++d) {
      if (mobius(d) == 0) continue;
      try {
        h += static_cast<double>(mobius(d)) / static_cast<double>(d) *
             eval_F(set, Angle::from_multiple(d, Angle(theta)));
      } catch (const SingularPoint&) {
        singular = true;
      }
    }
    if (singular) continue;
    CHECK(std::isfinite(h));
  }
}
