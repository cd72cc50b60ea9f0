#include "trigprod/constructions.hpp"

#include <limits>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace trigprod {

namespace detail {

std::uint64_t counter_mix64(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double counter_uniform01(std::uint64_t seed, std::uint64_t index) {
  return static_cast<double>(counter_mix64(seed, index) >> 11) * 0x1.0p-53;
}

}  // namespace detail

FrequencySet interval_set(std::int64_t n) {
  if (n < 1) throw InputError("interval_set requires n >= 1");
  std::vector<std::int64_t> elements(static_cast<std::size_t>(n));
  std::iota(elements.begin(), elements.end(), std::int64_t{1});
  return FrequencySet(std::move(elements));
}

double SelectorSample::inclusion_probability(std::int64_t n, std::int64_t j) {
  if (n < 2 || j < 1) throw InputError("inclusion_probability requires n >= 2, j >= 1");
  if (j >= n) return 0.0;
  return 1.0 - static_cast<double>(j) / static_cast<double>(n);
}

SelectorSample fejer_selector_sample(std::int64_t n, std::uint64_t seed) {
  if (n < 2) throw InputError("fejer_selector_sample requires n >= 2");
  std::vector<std::int64_t> chosen;
  for (std::int64_t j = 1; j < n; ++j) {
    const double u = detail::counter_uniform01(seed, static_cast<std::uint64_t>(j));
    if (u < SelectorSample::inclusion_probability(n, j)) chosen.push_back(j);
  }
  if (chosen.empty()) {
    throw EmptySample("selector sample came out empty for seed " + std::to_string(seed));
  }
  return SelectorSample{n, seed, FrequencySet(std::move(chosen))};
}

FrequencySet lacunary_set(Ratio q, std::int64_t m, std::int64_t start) {
  if (q.den < 1 || q.num <= q.den) throw InputError("lacunary ratio must satisfy q > 1");
  if (m < 1) throw InputError("lacunary_set requires m >= 1");
  if (start < 1) throw InputError("lacunary_set requires start >= 1");

  using boost::multiprecision::cpp_int;
  const cpp_int cap = cpp_int(std::numeric_limits<std::int64_t>::max() / 4);

  std::vector<std::int64_t> elements;
  elements.reserve(static_cast<std::size_t>(m));
  cpp_int num_pow = 1, den_pow = 1;
  std::int64_t prev = 0;
  for (std::int64_t k = 0; k < m; ++k) {
    const cpp_int scaled = cpp_int(start) * num_pow;
    cpp_int value = (scaled + den_pow - 1) / den_pow;  // ceil
    if (value > cap) throw Overflow("lacunary element exceeds the integer cap");
    std::int64_t v = value.convert_to<std::int64_t>();
    if (v <= prev) v = prev + 1;  // duplicate tie rule: bump to previous + 1
    elements.push_back(v);
    prev = v;
    num_pow *= q.num;
    den_pow *= q.den;
  }
  return FrequencySet(std::move(elements));
}

SearchResult best_of(std::int64_t n, std::int64_t trials, std::uint64_t seed0,
                     const SupNormOptions& eval_opts) {
  if (trials < 1) throw InputError("best_of requires trials >= 1");

  SearchResult out;
  out.trials = trials;
  out.per_trial.reserve(static_cast<std::size_t>(trials));
  bool have_best = false;
  for (std::int64_t t = 0; t < trials; ++t) {
    const std::uint64_t seed = seed0 + static_cast<std::uint64_t>(t);
    SelectorSample sample = fejer_selector_sample(n, seed);
    const SupNormEstimate estimate = sup_norm(sample.chosen, eval_opts);
    out.per_trial.push_back(TrialSummary{seed, sample.chosen.size(), estimate.log_max_found,
                                         estimate.argmax_theta.value});
    if (!have_best || estimate.log_max_found < out.best_log_M) {
      have_best = true;
      out.best_log_M = estimate.log_max_found;
      out.best = std::move(sample);
    }
  }
  return out;
}

}  // namespace trigprod
