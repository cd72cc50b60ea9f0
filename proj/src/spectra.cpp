#include "trigprod/spectra.hpp"

#include <cstdlib>

#include "trigprod/numtheory.hpp"

namespace trigprod {

Rational cos_sum_coefficient(const FrequencySet& set, std::int64_t t) {
  const std::int64_t abs_t = t < 0 ? -t : t;
  if (abs_t == 0) return Rational(0);
  return set.contains(abs_t) ? Rational(1, 2) : Rational(0);
}

Rational log_product_coefficient(const FrequencySet& set, std::int64_t t) {
  const std::int64_t abs_t = t < 0 ? -t : t;
  if (abs_t == 0) return Rational(0);
  Rational total(0);
  for (const std::int64_t a : divisors_in_set(abs_t, set)) {
    total += Rational(a, abs_t);
  }
  return -total / 2;
}

Rational tail_coefficient(const FrequencySet& set, std::int64_t t, std::int64_t r) {
  if (t < 1) throw InputError("tail_coefficient requires t >= 1");
  if (r < 1) throw InputError("tail_coefficient requires r >= 1");
  Rational total(0);
  for (const std::int64_t a : divisors_in_set(t, set)) {
    const std::int64_t l = t / a;
    if (l <= r) continue;
    total += Rational(a, t) * mobius_bracket(l, r);
  }
  return -total / 2;
}

Rational tail_coefficient_bound(const FrequencySet& set, std::int64_t t, std::int64_t r) {
  if (t < 1) throw InputError("tail_coefficient_bound requires t >= 1");
  if (r < 1) throw InputError("tail_coefficient_bound requires r >= 1");
  Rational total(0);
  for (const std::int64_t a : divisors_in_set(t, set)) {
    const std::int64_t l = t / a;
    if (l <= r) continue;
    total += Rational(a, t) * Rational(boost::multiprecision::cpp_int(1) << omega(l));
  }
  return total / 2;
}

MobiusInvertedCoeff mobius_inverted_coeff(const FrequencySet& set, std::int64_t t, std::int64_t r) {
  if (t < 1) throw InputError("mobius_inverted_coeff requires t >= 1");
  if (r < 1) throw InputError("mobius_inverted_coeff requires r >= 1");
  MobiusInvertedCoeff out;
  out.t = t;
  out.r = r;

  // Squarefree divisors d <= r of t, as subsets of the distinct primes of t.
  const std::vector<std::int64_t> primes = distinct_prime_factors(t);
  Rational h(0);
  auto dfs = [&](auto&& self, std::size_t idx, std::int64_t d, int sign) -> void {
    if (idx == primes.size()) {
      h += Rational(static_cast<std::int64_t>(sign), d) * log_product_coefficient(set, t / d);
      return;
    }
    self(self, idx + 1, d, sign);
    if (primes[idx] <= r / d) {
      self(self, idx + 1, d * primes[idx], -sign);
    }
  };
  dfs(dfs, 0, 1, 1);

  out.H_hat = h;
  out.f_hat = cos_sum_coefficient(set, t);
  out.G_hat = out.H_hat + out.f_hat;
  out.G_hat_bound = tail_coefficient_bound(set, t, r);
  return out;
}

std::string to_fraction_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace trigprod
