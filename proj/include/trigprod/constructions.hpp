#pragma once

#include <cstdint>
#include <vector>

#include "trigprod/frequency_set.hpp"
#include "trigprod/product.hpp"

namespace trigprod {

// {1, ..., n}.
FrequencySet interval_set(std::int64_t n);

// Random subset of {1..n-1} with independent selectors: j enters with
// probability 1 - j/n (the Fejer coefficient profile), drawn from a
// counter-based stream keyed by (seed, j), so regeneration is bit-identical
// and order-independent. Expected size (n-1)/2.
struct SelectorSample {
  std::int64_t ambient_n = 0;
  std::uint64_t seed = 0;
  FrequencySet chosen;

  static double inclusion_probability(std::int64_t n, std::int64_t j);
};

SelectorSample fejer_selector_sample(std::int64_t n, std::uint64_t seed);

// {ceil(start * q^k) : 0 <= k < m} with duplicates bumped to previous + 1;
// q = num/den > 1 held exactly, powers taken in exact integers.
struct Ratio {
  std::int64_t num = 2;
  std::int64_t den = 1;
};

FrequencySet lacunary_set(Ratio q, std::int64_t m, std::int64_t start);

struct TrialSummary {
  std::uint64_t seed = 0;
  std::size_t sample_size = 0;
  double log_max_found = 0.0;
  double argmax_theta = 0.0;
};

struct SearchResult {
  SelectorSample best;
  double best_log_M = 0.0;  // min over trials of the measured log M
  std::int64_t trials = 0;
  std::vector<TrialSummary> per_trial;
};

// Draws `trials` selector samples with seeds seed0, seed0+1, ..., measures
// log M of each through sup_norm, and keeps the smallest. Trials are
// evaluated in seed order; identical inputs reproduce identical results.
SearchResult best_of(std::int64_t n, std::int64_t trials, std::uint64_t seed0,
                     const SupNormOptions& eval_opts = {});

namespace detail {

// Output at stream position `index` of a splitmix-style generator keyed by
// `seed`; stateless, so draws are position-addressable.
std::uint64_t counter_mix64(std::uint64_t seed, std::uint64_t index);
double counter_uniform01(std::uint64_t seed, std::uint64_t index);

}  // namespace detail

}  // namespace trigprod
