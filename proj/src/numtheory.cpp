#include "trigprod/numtheory.hpp"

#include <algorithm>
#include <cmath>

namespace trigprod {

FactorSieve::FactorSieve(std::int64_t limit) : limit_(limit) {
  if (limit < 2) throw InputError("sieve limit must be >= 2");
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf_[static_cast<std::size_t>(i)] == 0) {
      primes_.push_back(static_cast<std::int32_t>(i));
      for (std::int64_t j = i; j <= limit; j += i) {
        if (spf_[static_cast<std::size_t>(j)] == 0) {
          spf_[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
        }
      }
    }
  }
}

std::int32_t FactorSieve::smallest_prime_factor(std::int64_t n) const {
  if (n < 2 || n > limit_) throw InputError("smallest_prime_factor query out of sieve range");
  return spf_[static_cast<std::size_t>(n)];
}

const FactorSieve& FactorSieve::shared() {
  static const FactorSieve instance(10000000);
  return instance;
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t n) {
  if (n < 1) throw InputError("factorization requires n >= 1");
  std::vector<std::int64_t> out;
  const FactorSieve& sieve = FactorSieve::shared();
  while (n > 1) {
    std::int64_t p;
    if (n <= sieve.limit()) {
      p = sieve.smallest_prime_factor(n);
    } else {
      p = n;  // prime unless a sieved prime <= sqrt(n) divides it
      for (const std::int32_t q : sieve.primes()) {
        const std::int64_t qq = q;
        if (qq * qq > n) break;
        if (n % qq == 0) {
          p = qq;
          break;
        }
      }
    }
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(std::int64_t d) {
  if (d < 1) throw InputError("mobius requires d >= 1");
  if (d == 1) return 1;
  std::int64_t n = d;
  int factors = 0;
  const FactorSieve& sieve = FactorSieve::shared();
  while (n > 1) {
    std::int64_t p;
    if (n <= sieve.limit()) {
      p = sieve.smallest_prime_factor(n);
    } else {
      p = n;
      for (const std::int32_t q : sieve.primes()) {
        const std::int64_t qq = q;
        if (qq * qq > n) break;
        if (n % qq == 0) {
          p = qq;
          break;
        }
      }
    }
    n /= p;
    if (n % p == 0) return 0;  // square factor
    ++factors;
  }
  return factors % 2 == 0 ? 1 : -1;
}

int omega(std::int64_t l) {
  if (l < 1) throw InputError("omega requires l >= 1");
  return static_cast<int>(distinct_prime_factors(l).size());
}

int mobius_bracket(std::int64_t l, std::int64_t r) {
  if (l < 1 || r < 1) throw InputError("mobius_bracket requires l, r >= 1");
  const std::vector<std::int64_t> primes = distinct_prime_factors(l);
  // Squarefree divisors of l are subsets of its distinct primes; walk them
  // depth-first, pruning products beyond r.
  int sum = 0;
  auto dfs = [&](auto&& self, std::size_t idx, std::int64_t product, int sign) -> void {
    if (idx == primes.size()) {
      sum += sign;
      return;
    }
    self(self, idx + 1, product, sign);
    if (primes[idx] <= r / product) {
      self(self, idx + 1, product * primes[idx], -sign);
    }
  };
  dfs(dfs, 0, 1, 1);
  return sum;
}

namespace {

std::int64_t psi_by_sieve(std::int64_t x, std::int64_t y) {
  std::vector<std::uint8_t> smooth(static_cast<std::size_t>(x) + 1, 0);
  smooth[1] = 1;
  const FactorSieve& sieve = FactorSieve::shared();
  std::int64_t count = 1;
  for (std::int64_t n = 2; n <= x; ++n) {
    const std::int64_t p = sieve.smallest_prime_factor(n);
    if (p <= y && smooth[static_cast<std::size_t>(n / p)]) {
      smooth[static_cast<std::size_t>(n)] = 1;
      ++count;
    }
  }
  return count;
}

std::int64_t psi_by_enumeration(std::int64_t x, std::int64_t y) {
  std::vector<std::int64_t> primes;
  if (y >= 2) {
    const FactorSieve& sieve = FactorSieve::shared();
    if (y <= sieve.limit()) {
      for (const std::int32_t p : sieve.primes()) {
        if (p > y) break;
        primes.push_back(p);
      }
    } else {
      throw AllocationCap("smoothness bound exceeds the sieve limit");
    }
  }
  // Counts products prod p_i^{e_i} <= rem over primes[idx..]; integer
  // division keeps everything exact.
  auto dfs = [&](auto&& self, std::size_t idx, std::int64_t rem) -> std::int64_t {
    if (idx == primes.size()) return 1;
    std::int64_t total = 0;
    std::int64_t cur = rem;
    for (;;) {
      total += self(self, idx + 1, cur);
      if (cur < primes[idx]) break;
      cur /= primes[idx];
    }
    return total;
  };
  return dfs(dfs, 0, x);
}

}  // namespace

std::int64_t psi_smooth(std::int64_t x, std::int64_t y, PsiMethod method,
                        std::int64_t enumeration_cap) {
  if (x < 1) throw InputError("psi_smooth requires x >= 1");
  if (y < 2) throw InputError("psi_smooth requires y >= 2");
  if (x > enumeration_cap) {
    throw AllocationCap("psi_smooth argument exceeds the configured cap");
  }
  if (y >= x) return x;  // every n <= x is x-smooth

  switch (method) {
    case PsiMethod::sieve:
      if (x > FactorSieve::shared().limit()) {
        throw AllocationCap("psi_smooth sieve method requires x within the sieve limit");
      }
      return psi_by_sieve(x, y);
    case PsiMethod::enumerate:
      return psi_by_enumeration(x, y);
    case PsiMethod::auto_select:
    default:
      if (x <= FactorSieve::shared().limit()) return psi_by_sieve(x, y);
      return psi_by_enumeration(x, y);
  }
}

std::vector<std::int64_t> divisors_in_set(std::int64_t t, const FrequencySet& set) {
  if (t < 1) throw InputError("divisors_in_set requires t >= 1");
  std::vector<std::int64_t> out;
  for (const std::int64_t a : set) {
    if (a > t) break;
    if (t % a == 0) out.push_back(a);
  }
  return out;
}

}  // namespace trigprod
