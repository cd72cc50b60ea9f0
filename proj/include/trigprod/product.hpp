#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trigprod/frequency_set.hpp"
#include "trigprod/kernels.hpp"

namespace trigprod {

using BigInt = boost::multiprecision::cpp_int;

enum class SupNormMethod { grid_refine, exact_coeff };

// Estimate of log M(S), M(S) = max_{|z|=1} prod_j |1 - z^{a_j}|.
//
// log_max_found is the value of F_S at argmax_theta, hence always a valid
// lower estimate of log M(S). certified_log_upper, present in exact_coeff
// mode, brackets the maximum from above, so the truth lies in
// [log_max_found, certified_log_upper].
struct SupNormEstimate {
  double log_max_found = 0.0;
  Angle argmax_theta;
  std::optional<double> certified_log_upper;
  std::size_t grid_size = 0;
  std::int64_t refinement_steps = 0;
  SupNormMethod method = SupNormMethod::grid_refine;
  bool gap_reached = true;  // exact_coeff mode: bracket met the target gap
};

struct SupNormOptions {
  // grid.size == 0 applies the default rule: next power of two
  // >= oversample * N * ceil(sqrt(n)). The default oversample is 16; full
  // polynomial-degree sampling is unaffordable for large sets and the
  // integrand's finest oscillation scale is ~1/N.
  GridSpec grid;
  int refine_iters = 64;
  double refine_xtol = 1e-13;
  int top_k = 16;  // refine this many best grid points to resist near-tie aliasing
  int threads = 0;
  std::size_t table_cap = kDefaultTableCap;
};

// Exact integer coefficients c_0..c_A of prod_j (1 - z^{a_j}), A = sum a_j.
// Always: c_0 = 1, c_A = (-1)^n, sum_k c_k = 0.
struct CoefficientVector {
  std::vector<BigInt> coefficients;
  std::size_t degree() const { return coefficients.size() - 1; }
};

struct CertifiedOptions {
  std::int64_t degree_cap = 100000;        // cap on sum a_j
  std::size_t max_point_evals = 2000000;   // iteration cap for the bracket search
  std::size_t initial_grid = 0;            // 0: next power of two >= 4 (A + 1), clamped
  std::size_t threads_hint = 0;            // reserved; the search is sequential
};

// F_S(theta) = sum_j log|1 - e(a_j theta)|. Throws SingularPoint when some
// a_j theta is an integer to machine resolution.
double eval_F(const FrequencySet& set, Angle theta);

// F_S'(theta) = pi sum_j a_j cot(pi a_j theta).
double eval_F_derivative(const FrequencySet& set, Angle theta);

// F_S''(theta) = -pi^2 sum_j a_j^2 / sin^2(pi a_j theta); F_S is concave on
// every interval free of singular points, which makes the Newton refinement
// in sup_norm safe.
double eval_F_second_derivative(const FrequencySet& set, Angle theta);

// Grid scan of F_S over theta = g/G (singular points skipped; they cannot
// carry the maximum), followed by safeguarded Newton/bisection refinement of
// the top_k grid points. No certified upper bound in this mode.
SupNormEstimate sup_norm(const FrequencySet& set, const SupNormOptions& opts = {});

// Iterated sparse multiplication c <- c - shift(c, a_j) over exact integers.
CoefficientVector exact_coefficients(const FrequencySet& set, std::int64_t degree_cap = 100000);

// Certified two-sided bracket of log M(S) from the exact coefficients:
// |P| is evaluated on a power-of-two grid (via FFT of the coefficients folded
// mod G) and candidate sub-intervals are split until the Lipschitz bound
// max|P| <= max_eval + L * halfwidth pins the bracket within target_gap.
// L combines the coefficient bound 2 pi sum_k k |c_k| >= |dP/dtheta| with the
// degree bound 2 pi A * (current upper). Floating-point evaluation error is
// budgeted into both bracket ends, so the bracket stays valid. If the split
// cap is hit first the best bracket is returned with gap_reached = false.
SupNormEstimate certified_sup(const FrequencySet& set, double target_gap,
                              const CertifiedOptions& opts = {});

}  // namespace trigprod
