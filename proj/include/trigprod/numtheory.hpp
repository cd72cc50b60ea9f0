#pragma once

#include <cstdint>
#include <vector>

#include "trigprod/frequency_set.hpp"

namespace trigprod {

// Smallest-prime-factor sieve for 2..limit; queries beyond the limit fall
// back to trial division by the sieved primes.
class FactorSieve {
public:
  explicit FactorSieve(std::int64_t limit);

  std::int64_t limit() const { return limit_; }
  std::int32_t smallest_prime_factor(std::int64_t n) const;
  const std::vector<std::int32_t>& primes() const { return primes_; }

  // Shared default instance (limit 1e7), built once and then read-only.
  static const FactorSieve& shared();

private:
  std::int64_t limit_;
  std::vector<std::int32_t> spf_;
  std::vector<std::int32_t> primes_;
};

// Distinct prime factors, ascending.
std::vector<std::int64_t> distinct_prime_factors(std::int64_t n);

// Moebius function mu(d) in {-1, 0, 1}.
int mobius(std::int64_t d);

// omega(l): number of distinct prime factors.
int omega(std::int64_t l);

// sum of mu(d) over squarefree divisors d <= r of l. Equals 1 for l = 1 and
// 0 for every 1 < l <= r (truncated Moebius identity with d <= r).
int mobius_bracket(std::int64_t l, std::int64_t r);

enum class PsiMethod { auto_select, sieve, enumerate };

// psi(x, y) = #{ n <= x : every prime factor of n is <= y }, exact.
// sieve: smooth-flag walk over 2..x (needs the factor sieve up to x);
// enumerate: depth-first product enumeration over the primes <= y.
std::int64_t psi_smooth(std::int64_t x, std::int64_t y,
                        PsiMethod method = PsiMethod::auto_select,
                        std::int64_t enumeration_cap = 100000000);

// Ascending list of the elements of S dividing t.
std::vector<std::int64_t> divisors_in_set(std::int64_t t, const FrequencySet& set);

}  // namespace trigprod
