#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "trigprod/frequency_set.hpp"

namespace trigprod::detail {

struct GridCandidate {
  double value;
  std::uint64_t index;
};

// Default grid for scanning a band-limited objective with max frequency
// max_freq and n_terms summands: next power of two >= oversample * max_freq *
// ceil(sqrt(n_terms)), at least 16.
std::size_t default_band_grid(std::int64_t max_freq, std::size_t n_terms, double oversample);

// Top-k grid points of g -> sum_j table[(a_j * g) mod G], scanned in
// fixed-size chunks (data-parallel, deterministic merge in chunk order;
// ties break toward the smaller grid index). Points whose sum is -inf
// (singular grid points) never enter the candidate list.
std::vector<GridCandidate> scan_table_sum_max(const std::vector<double>& table,
                                              const FrequencySet& set, std::size_t top_k,
                                              int threads);

struct RefineResult {
  double theta = 0;
  double value = 0;
  int steps = 0;
};

// Safeguarded maximization of f on [lo, hi] around the seed x0: bisection on
// the sign change of df with Newton acceleration through ddf, at most
// max_iters iterations, stopping at theta tolerance xtol. Steps that would
// leave the current bracket are refused (bisected instead). Evaluations that
// throw SingularPoint count as -inf; if refinement fails to improve, the seed
// value wins.
RefineResult refine_maximum(const std::function<double(double)>& f,
                            const std::function<double(double)>& df,
                            const std::function<double(double)>& ddf, double lo, double hi,
                            double x0, int max_iters, double xtol);

}  // namespace trigprod::detail
