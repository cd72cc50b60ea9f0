#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "trigprod/frequency_set.hpp"
#include "trigprod/kernels.hpp"

namespace trigprod {

// Parameters of the degree-J truncated log series with damping rho = 1 - 1/sqrt(J):
// pointwise, for every theta,
//   log|1 - e(theta)| <= -sum_{j<=J} (rho^j / j) cos(2 pi j theta) + per_factor_error,
// with per_factor_error = rho^J / (J (1 - rho)) + (1 - rho) <= 2 / sqrt(J).
struct TruncationParams {
  std::int64_t order = 0;  // J
  double rho = 0.0;
  double per_factor_error = 0.0;

  static TruncationParams for_order(std::int64_t order);  // requires J >= 4
};

struct TruncationBound {
  double value = 0.0;  // >= log M(S), up to grid localization of the smooth objective
  TruncationParams params;
  std::size_t grid_size = 0;
  bool grid_capped = false;  // default rule hit the allocation cap: heuristic status
};

// Upper bound on log M(S): maximizes the damped objective
// sum_a log|1 - rho e(a theta)| over the grid (with derivative refinement)
// and adds n * per_factor_error. Summing the geometric tail beyond J into the
// damped logarithm costs at most n rho^J / (J (1 - rho)), which the error
// term already budgets. Default grid: min(2^26, next power of two >= 8 J N).
TruncationBound truncation_upper_bound(const FrequencySet& set, std::int64_t order,
                                       const GridSpec& grid = {}, int threads = 0);

// Certified lower bound on log M(S) from convolving the log-series with a
// Fejer kernel of length n*R: since Fhat_{nR}(s) = (1 - |s|/(nR))_+ vanishes
// beyond nR, the double sum is finite and is evaluated exactly:
//   value = -sum_{j in S} sum_{k=1}^{floor(nR/j)} (1 - jk/(nR)) (1/k) cos(2 pi j k theta0).
// For any theta0 this certifies log M(S) >= value; theta0 defaults to 3/(4n).
struct DenseLowerCert {
  std::int64_t ambient_n = 0;
  double multiplier = 0.0;  // R
  Angle theta0;
  double value = 0.0;
  std::int64_t k_max_used = 0;
  // Diagnostic split: undamped k=1 term, damping correction bound, and the
  // k >= 2 remainder bound. value >= term_first + term_second + term_third.
  double term_first = 0.0;
  double term_second = 0.0;
  double term_third = 0.0;
};

// scan_theta0 replaces the default evaluation point by the best of 8n grid
// candidates (the certificate is valid at every theta0, so taking the max is
// free). An explicit theta0 wins over both.
DenseLowerCert dense_lower_cert(const FrequencySet& set, std::int64_t ambient_n, double multiplier,
                                std::optional<Angle> theta0 = std::nullopt,
                                bool scan_theta0 = false);

// The three terms of the dense lower bound at theta0 = 3/(4n) for the full
// interval S = {1..n}: the k=1 Dirichlet term 1/2 - D_n(3 pi / (2n))/2, the
// damping term -(n+1)/(2R), and the k in [2, k0] remainder sum.
std::array<double, 3> dense_bound_terms(const FrequencySet& set, std::int64_t n, double multiplier,
                                        std::int64_t k0);

struct CosineMinResult {
  double min_value = 0.0;
  Angle argmin_theta;
  double negated = 0.0;  // -min_value
};

// Minimizes f(theta) = sum_j cos(2 pi a_j theta) by grid scan plus derivative
// refinement.
CosineMinResult cosine_min(const FrequencySet& set, const GridSpec& grid = {}, int threads = 0);

}  // namespace trigprod
