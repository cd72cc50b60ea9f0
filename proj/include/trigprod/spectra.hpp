#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "trigprod/frequency_set.hpp"

namespace trigprod {

using Rational = boost::multiprecision::cpp_rational;

// Exponential-basis Fourier coefficient of f(theta) = sum_j cos(2 pi a_j theta):
// 1/2 when |t| is an element of S, else 0.
Rational cos_sum_coefficient(const FrequencySet& set, std::int64_t t);

// Fourier coefficient of F(theta) = sum_j log|1 - e(a_j theta)|:
// -(1/2) sum_{a | |t|, a in S} a / |t| for t != 0, and 0 at t = 0 (each
// factor integrates to zero over the circle).
Rational log_product_coefficient(const FrequencySet& set, std::int64_t t);

// Coefficient at frequency t > 0 of the tail series
//   G(theta) = -sum_j sum_{l > r} cos(2 pi a_j l theta) / l *
//              [sum_{d | l, d <= r, d squarefree} mu(d)],
// exactly: -(1/2) sum_{a in S, a | t, t/a > r} (a/t) * bracket(t/a, r).
Rational tail_coefficient(const FrequencySet& set, std::int64_t t, std::int64_t r);

// |G_hat(t)| <= (1/2) sum_{a in S, a | t, t/a > r} (a/t) 2^{omega(t/a)}.
Rational tail_coefficient_bound(const FrequencySet& set, std::int64_t t, std::int64_t r);

// Coefficient bookkeeping of the truncated Moebius inversion
//   H(theta) = sum_{d <= r, squarefree} (mu(d)/d) F(d theta) = -f(theta) + G(theta):
// H_hat = -f_hat + G_hat holds exactly, and |G_hat| <= G_hat_bound.
struct MobiusInvertedCoeff {
  std::int64_t t = 0;
  std::int64_t r = 0;
  Rational H_hat;
  Rational f_hat;
  Rational G_hat;
  Rational G_hat_bound;
};

MobiusInvertedCoeff mobius_inverted_coeff(const FrequencySet& set, std::int64_t t, std::int64_t r);

// "p/q" (plain "p" when q = 1).
std::string to_fraction_string(const Rational& value);

}  // namespace trigprod
