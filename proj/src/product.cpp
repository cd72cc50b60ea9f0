#include "trigprod/product.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>

#include "trigprod/detail/fft.hpp"
#include "trigprod/detail/scan.hpp"

namespace trigprod {

namespace {

constexpr long double kPiL = 3.14159265358979323846264338327950288L;

}  // namespace

double eval_F(const FrequencySet& set, Angle theta) {
  double total = 0.0;
  for (const std::int64_t a : set) {
    total += log_abs_one_minus(Angle::from_multiple(a, theta));
  }
  return total;
}

double eval_F_derivative(const FrequencySet& set, Angle theta) {
  double total = 0.0;
  for (const std::int64_t a : set) {
    const Angle t = Angle::from_multiple(a, theta);
    const double d = std::min(t.value, 1.0 - t.value);
    if (!(d >= kSingularEps)) throw SingularPoint("F_S' undefined at a singular point");
    const double x = kPi * t.value;
    total += kPi * static_cast<double>(a) * (std::cos(x) / std::sin(x));
  }
  return total;
}

double eval_F_second_derivative(const FrequencySet& set, Angle theta) {
  double total = 0.0;
  for (const std::int64_t a : set) {
    const Angle t = Angle::from_multiple(a, theta);
    const double d = std::min(t.value, 1.0 - t.value);
    if (!(d >= kSingularEps)) throw SingularPoint("F_S'' undefined at a singular point");
    const double s = std::sin(kPi * t.value);
    const double da = static_cast<double>(a);
    total -= kPi * kPi * da * da / (s * s);
  }
  return total;
}

SupNormEstimate sup_norm(const FrequencySet& set, const SupNormOptions& opts) {
  const std::size_t grid_size =
      opts.grid.size != 0
          ? opts.grid.size
          : detail::default_band_grid(set.max_element(), set.size(), opts.grid.oversample);
  const std::vector<double> table = log_table(GridSpec{grid_size, opts.grid.oversample}, opts.table_cap);

  const auto candidates =
      detail::scan_table_sum_max(table, set, static_cast<std::size_t>(std::max(1, opts.top_k)), opts.threads);
  if (candidates.empty()) {
    throw InputError("every grid point is singular for this set; increase the grid size");
  }

  auto f = [&](double x) { return eval_F(set, Angle(x)); };
  auto df = [&](double x) { return eval_F_derivative(set, Angle(x)); };
  auto ddf = [&](double x) { return eval_F_second_derivative(set, Angle(x)); };

  SupNormEstimate best;
  best.method = SupNormMethod::grid_refine;
  best.grid_size = grid_size;
  best.log_max_found = -std::numeric_limits<double>::infinity();

  const double h = 1.0 / static_cast<double>(grid_size);
  for (const auto& cand : candidates) {
    const double theta0 = static_cast<double>(cand.index) * h;
    const auto refined = detail::refine_maximum(f, df, ddf, theta0 - h, theta0 + h, theta0,
                                                opts.refine_iters, opts.refine_xtol);
    best.refinement_steps += refined.steps;
    const double value = std::max(refined.value, cand.value);
    const double theta = refined.value >= cand.value ? refined.theta : theta0;
    if (value > best.log_max_found) {
      best.log_max_found = value;
      best.argmax_theta = Angle(theta);
    }
  }
  return best;
}

CoefficientVector exact_coefficients(const FrequencySet& set, std::int64_t degree_cap) {
  const std::int64_t degree = set.sum();
  if (degree > degree_cap) {
    throw DegreeCap("sum of frequencies " + std::to_string(degree) + " exceeds degree cap " +
                    std::to_string(degree_cap));
  }
  CoefficientVector out;
  out.coefficients.assign(static_cast<std::size_t>(degree) + 1, BigInt(0));
  out.coefficients[0] = 1;
  std::int64_t current = 0;
  for (const std::int64_t a : set) {
    current += a;
    for (std::int64_t k = current; k >= a; --k) {
      out.coefficients[static_cast<std::size_t>(k)] -=
          out.coefficients[static_cast<std::size_t>(k - a)];
    }
  }
  return out;
}

namespace {

struct Segment {
  double key;  // certified upper bound for |P| on [tl, tr] at push time
  double tl, tr;
  double ul, ur;  // certified point upper bounds at the endpoints

  bool operator<(const Segment& other) const {
    if (key != other.key) return key < other.key;
    return tl > other.tl;  // deterministic tie-break: smaller left end first
  }
};

}  // namespace

SupNormEstimate certified_sup(const FrequencySet& set, double target_gap,
                              const CertifiedOptions& opts) {
  if (!(target_gap > 0)) throw InputError("certified_sup requires target_gap > 0");
  const CoefficientVector poly = exact_coefficients(set, opts.degree_cap);
  const std::size_t degree = poly.degree();

  std::vector<long double> coeff(poly.coefficients.size());
  long double sum_abs = 0.0L;
  long double moment = 0.0L;  // sum_k k |c_k|
  for (std::size_t k = 0; k < poly.coefficients.size(); ++k) {
    coeff[k] = poly.coefficients[k].convert_to<long double>();
    sum_abs += std::abs(coeff[k]);
    moment += static_cast<long double>(k) * std::abs(coeff[k]);
  }
  if (!std::isfinite(static_cast<double>(sum_abs))) {
    throw NonFinite("coefficient magnitudes exceed floating-point range");
  }

  // |d/dtheta P(e(theta))| <= 2 pi sum_k k |c_k|, and by the Bernstein bound
  // also <= 2 pi A max|P| <= 2 pi A * (any certified upper). max|P| <= sum|c_k|
  // seeds the latter.
  const double lipschitz_coeff = static_cast<double>(2.0L * kPiL * moment);
  const double bernstein_factor = 2.0 * kPi * static_cast<double>(degree);
  double global_upper_seed = static_cast<double>(sum_abs);

  const long double eps_ld = std::numeric_limits<long double>::epsilon();
  const double eta_horner =
      static_cast<double>(8.0L * static_cast<long double>(degree + 1) * eps_ld * sum_abs) +
      std::numeric_limits<double>::min();

  auto abs_poly = [&](double theta) {
    const long double ang = 2.0L * kPiL * static_cast<long double>(theta);
    const std::complex<long double> z(std::cos(ang), std::sin(ang));
    std::complex<long double> acc = coeff.back();
    for (std::size_t k = coeff.size() - 1; k-- > 0;) {
      acc = acc * z + coeff[k];
    }
    return static_cast<double>(std::abs(acc));
  };

  std::size_t grid_size = opts.initial_grid;
  if (grid_size == 0) {
    grid_size = std::bit_ceil(std::clamp<std::size_t>(4 * (degree + 1), 1024, std::size_t{1} << 18));
  } else {
    grid_size = std::bit_ceil(std::max<std::size_t>(grid_size, 8));
  }

  // |P| on the full grid via FFT of the coefficients folded mod G: on G-th
  // roots of unity z^k = z^{k mod G}.
  std::vector<BigInt> folded(grid_size, BigInt(0));
  for (std::size_t k = 0; k < poly.coefficients.size(); ++k) {
    folded[k % grid_size] += poly.coefficients[k];
  }
  std::vector<std::complex<double>> spectrum(grid_size);
  double folded_abs_sum = 0.0;
  for (std::size_t m = 0; m < grid_size; ++m) {
    const double c = folded[m].convert_to<double>();
    if (!std::isfinite(c)) throw NonFinite("folded coefficient exceeds double range");
    spectrum[m] = std::complex<double>(c, 0.0);
    folded_abs_sum += std::abs(c);
  }
  detail::fft_pow2(spectrum, +1);
  const double eta_fft = 16.0 * std::numeric_limits<double>::epsilon() *
                             std::log2(static_cast<double>(grid_size)) * folded_abs_sum +
                         std::numeric_limits<double>::min();

  double best_lo = 0.0;
  double best_theta = 0.0;
  std::vector<double> grid_upper(grid_size);
  for (std::size_t g = 0; g < grid_size; ++g) {
    const double v = std::abs(spectrum[g]);
    grid_upper[g] = v + eta_fft;
    const double lo = v - eta_fft;
    if (lo > best_lo) {
      best_lo = lo;
      best_theta = static_cast<double>(g) / static_cast<double>(grid_size);
    }
  }

  auto lipschitz_now = [&](double upper) {
    return std::min(lipschitz_coeff, bernstein_factor * upper);
  };

  std::priority_queue<Segment> queue;
  {
    const double h = 1.0 / static_cast<double>(grid_size);
    const double lip = lipschitz_now(global_upper_seed);
    for (std::size_t g = 0; g < grid_size; ++g) {
      const double ul = grid_upper[g];
      const double ur = grid_upper[(g + 1) % grid_size];
      const double key = std::max(ul, ur) + 0.5 * lip * h;
      queue.push(Segment{key, static_cast<double>(g) * h, static_cast<double>(g + 1) * h, ul, ur});
    }
  }

  SupNormEstimate result;
  result.method = SupNormMethod::exact_coeff;
  result.grid_size = grid_size;
  result.gap_reached = false;

  std::size_t evals = 0;
  double global_upper = global_upper_seed;
  while (!queue.empty()) {
    const Segment top = queue.top();
    global_upper = std::min(global_upper, top.key);
    if (std::log(global_upper) - std::log(std::max(best_lo, std::numeric_limits<double>::min())) <=
        target_gap) {
      result.gap_reached = true;
      break;
    }
    if (evals >= opts.max_point_evals) break;
    queue.pop();

    const double tm = 0.5 * (top.tl + top.tr);
    const double vm = abs_poly(tm);
    ++evals;
    if (vm - eta_horner > best_lo) {
      best_lo = vm - eta_horner;
      best_theta = tm;
    }
    const double um = vm + eta_horner;
    const double lip = lipschitz_now(global_upper);
    const double half = 0.25 * (top.tr - top.tl);
    queue.push(Segment{std::max(top.ul, um) + lip * half, top.tl, tm, top.ul, um});
    queue.push(Segment{std::max(um, top.ur) + lip * half, tm, top.tr, um, top.ur});
  }

  result.refinement_steps = static_cast<std::int64_t>(evals);
  result.log_max_found = std::log(std::max(best_lo, std::numeric_limits<double>::min()));
  result.argmax_theta = Angle(best_theta);
  result.certified_log_upper = std::log(global_upper);
  return result;
}

}  // namespace trigprod
