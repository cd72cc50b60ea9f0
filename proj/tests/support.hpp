#pragma once

#include <complex>
#include <random>
#include <vector>

#include "trigprod/frequency_set.hpp"
#include "trigprod/product.hpp"

namespace testsupport {

// Independent oracle: product of (1 - z^{a_j}) by divide-and-conquer naive
// convolution, sharing no code with exact_coefficients' shift-subtract loop.
inline std::vector<trigprod::BigInt> naive_product_poly(const std::vector<std::int64_t>& freqs,
                                                        std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) {
    std::vector<trigprod::BigInt> p(static_cast<std::size_t>(freqs[lo]) + 1, trigprod::BigInt(0));
    p.front() = 1;
    p.back() = -1;
    return p;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const auto left = naive_product_poly(freqs, lo, mid);
  const auto right = naive_product_poly(freqs, mid, hi);
  std::vector<trigprod::BigInt> out(left.size() + right.size() - 1, trigprod::BigInt(0));
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i] == 0) continue;
    for (std::size_t j = 0; j < right.size(); ++j) {
      out[i + j] += left[i] * right[j];
    }
  }
  return out;
}

inline std::vector<trigprod::BigInt> naive_product_poly(const trigprod::FrequencySet& set) {
  return naive_product_poly(set.elements(), 0, set.size());
}

// |P(e(theta))| from explicit coefficients, long double Horner.
inline double abs_poly_at(const std::vector<trigprod::BigInt>& coeffs, double theta) {
  const long double pi_l = 3.14159265358979323846264338327950288L;
  const long double ang = 2.0L * pi_l * static_cast<long double>(theta);
  const std::complex<long double> z(std::cos(ang), std::sin(ang));
  std::complex<long double> acc = coeffs.back().convert_to<long double>();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    acc = acc * z + coeffs[k].convert_to<long double>();
  }
  return static_cast<double>(std::abs(acc));
}

// Random strictly increasing subset of {1..max_value} with sum capped.
inline trigprod::FrequencySet random_set(std::mt19937_64& rng, std::int64_t max_value,
                                         std::int64_t sum_cap, std::size_t max_size) {
  std::uniform_int_distribution<std::int64_t> pick(1, max_value);
  std::vector<std::int64_t> chosen;
  std::int64_t sum = 0;
  for (std::size_t tries = 0; tries < 8 * max_size && chosen.size() < max_size; ++tries) {
    const std::int64_t a = pick(rng);
    if (std::find(chosen.begin(), chosen.end(), a) != chosen.end()) continue;
    if (sum + a > sum_cap) continue;
    chosen.push_back(a);
    sum += a;
  }
  if (chosen.empty()) chosen.push_back(1);
  std::sort(chosen.begin(), chosen.end());
  return trigprod::FrequencySet(std::move(chosen));
}

}  // namespace testsupport
