#include "trigprod/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "trigprod/detail/scan.hpp"
#include "trigprod/parallel.hpp"

namespace trigprod {

TruncationParams TruncationParams::for_order(std::int64_t order) {
  if (order < 4) throw InputError("truncation order J must be >= 4");
  TruncationParams p;
  p.order = order;
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(order));
  p.rho = 1.0 - inv_sqrt;
  p.per_factor_error =
      std::pow(p.rho, static_cast<double>(order)) / (static_cast<double>(order) * inv_sqrt) +
      inv_sqrt;
  return p;
}

namespace {

// 1 - 2 rho cos(2 pi t) + rho^2 = (1 - rho)^2 + 4 rho sin^2(pi t); the second
// form stays accurate near t = 0 where the first cancels.
double damped_sq_modulus(double rho, double t) {
  const double s = std::sin(kPi * t);
  const double one_minus = 1.0 - rho;
  return one_minus * one_minus + 4.0 * rho * s * s;
}

}  // namespace

TruncationBound truncation_upper_bound(const FrequencySet& set, std::int64_t order,
                                       const GridSpec& grid, int threads) {
  const TruncationParams params = TruncationParams::for_order(order);
  const double rho = params.rho;

  TruncationBound out;
  out.params = params;

  std::size_t grid_size = grid.size;
  if (grid_size == 0) {
    const double rule = 8.0 * static_cast<double>(order) * static_cast<double>(set.max_element());
    std::size_t g = 16;
    while (g < static_cast<std::size_t>(std::min(rule, 9.0e15)) && g < kDefaultTableCap) g <<= 1;
    grid_size = g;
    out.grid_capped = static_cast<double>(grid_size) < rule;
  }
  if (grid_size < 2) throw InputError("truncation grid must have size >= 2");
  if (grid_size > kDefaultTableCap) {
    throw AllocationCap("truncation grid exceeds the table cap");
  }
  out.grid_size = grid_size;

  std::vector<double> table(grid_size);
  for_each_chunk(grid_size, std::size_t{1} << 14, threads,
                 [&](std::size_t, std::size_t begin, std::size_t end) {
                   for (std::size_t m = begin; m < end; ++m) {
                     const double t = static_cast<double>(m) / static_cast<double>(grid_size);
                     table[m] = 0.5 * std::log(damped_sq_modulus(rho, t));
                   }
                 });

  const auto candidates = detail::scan_table_sum_max(table, set, 16, threads);

  auto objective = [&](double x) {
    double total = 0.0;
    for (const std::int64_t a : set) {
      total += 0.5 * std::log(damped_sq_modulus(rho, Angle::from_multiple(a, Angle(x)).value));
    }
    return total;
  };
  auto slope = [&](double x) {
    double total = 0.0;
    for (const std::int64_t a : set) {
      const double t = Angle::from_multiple(a, Angle(x)).value;
      const double da = static_cast<double>(a);
      const double denom = damped_sq_modulus(rho, t);
      total += 2.0 * kPi * da * rho * std::sin(2.0 * kPi * t) / denom;
    }
    return total;
  };
  auto curvature = [&](double x) {
    double total = 0.0;
    for (const std::int64_t a : set) {
      const double t = Angle::from_multiple(a, Angle(x)).value;
      const double da = static_cast<double>(a);
      const double denom = damped_sq_modulus(rho, t);
      const double dprime = 4.0 * kPi * da * rho * std::sin(2.0 * kPi * t);
      const double dsecond = 8.0 * kPi * kPi * da * da * rho * std::cos(2.0 * kPi * t);
      total += (dsecond * denom - dprime * dprime) / (2.0 * denom * denom);
    }
    return total;
  };

  double best = -std::numeric_limits<double>::infinity();
  const double h = 1.0 / static_cast<double>(grid_size);
  for (const auto& cand : candidates) {
    const double theta0 = static_cast<double>(cand.index) * h;
    const auto refined =
        detail::refine_maximum(objective, slope, curvature, theta0 - h, theta0 + h, theta0, 64, 1e-13);
    best = std::max(best, std::max(refined.value, cand.value));
  }

  out.value = best + static_cast<double>(set.size()) * params.per_factor_error;
  return out;
}

namespace {

double dense_cert_value(const FrequencySet& set, double fejer_length, Angle theta0) {
  double total = 0.0;
  for (const std::int64_t j : set) {
    const std::int64_t k_max =
        static_cast<std::int64_t>(std::floor(fejer_length / static_cast<double>(j)));
    for (std::int64_t k = 1; k <= k_max; ++k) {
      const double weight =
          std::max(0.0, 1.0 - static_cast<double>(j * k) / fejer_length);
      const Angle t = Angle::from_multiple(j * k, theta0);
      total += weight / static_cast<double>(k) * std::cos(2.0 * kPi * t.value);
    }
  }
  return -total;
}

}  // namespace

DenseLowerCert dense_lower_cert(const FrequencySet& set, std::int64_t ambient_n, double multiplier,
                                std::optional<Angle> theta0, bool scan_theta0) {
  if (ambient_n < 1) throw InputError("ambient n must be >= 1");
  if (set.max_element() > ambient_n) {
    throw SetNotInRange("set has elements above the ambient interval {1..n}");
  }
  if (!(multiplier > 1.0)) throw InputError("Fejer multiplier R must be > 1");

  const double fejer_length = static_cast<double>(ambient_n) * multiplier;

  DenseLowerCert out;
  out.ambient_n = ambient_n;
  out.multiplier = multiplier;

  if (theta0.has_value()) {
    out.theta0 = *theta0;
    out.value = dense_cert_value(set, fejer_length, out.theta0);
  } else if (scan_theta0) {
    // The certificate holds at every theta0, so scanning candidates and
    // keeping the best is free. Coarse grid of 8n points plus the default.
    Angle best_theta(3.0 / (4.0 * static_cast<double>(ambient_n)));
    double best = dense_cert_value(set, fejer_length, best_theta);
    const std::int64_t candidates = 8 * ambient_n;
    for (std::int64_t c = 1; c < candidates; ++c) {
      const Angle t = Angle::from_grid_index(static_cast<std::uint64_t>(c),
                                             static_cast<std::uint64_t>(candidates));
      const double v = dense_cert_value(set, fejer_length, t);
      if (v > best) {
        best = v;
        best_theta = t;
      }
    }
    out.theta0 = best_theta;
    out.value = best;
  } else {
    out.theta0 = Angle(3.0 / (4.0 * static_cast<double>(ambient_n)));
    out.value = dense_cert_value(set, fejer_length, out.theta0);
  }

  out.k_max_used =
      static_cast<std::int64_t>(std::floor(fejer_length / static_cast<double>(set.min_element())));

  // Diagnostic split mirroring the k = 1 / damping / k >= 2 decomposition;
  // each piece lower-bounds its share, so value >= sum of the three terms.
  double first = 0.0, second = 0.0;
  for (const std::int64_t j : set) {
    first -= std::cos(2.0 * kPi * Angle::from_multiple(j, out.theta0).value);
    second -= static_cast<double>(j) / fejer_length;
  }
  double third = 0.0;
  for (std::int64_t k = 2; k <= out.k_max_used; ++k) {
    double inner = 0.0;
    for (const std::int64_t j : set) {
      const double weight = 1.0 - static_cast<double>(j * k) / fejer_length;
      if (weight <= 0.0) continue;
      inner += weight * std::cos(2.0 * kPi * Angle::from_multiple(j * k, out.theta0).value);
    }
    third -= std::abs(inner) / static_cast<double>(k);
  }
  out.term_first = first;
  out.term_second = second;
  out.term_third = third;
  return out;
}

std::array<double, 3> dense_bound_terms(const FrequencySet& set, std::int64_t n, double multiplier,
                                        std::int64_t k0) {
  if (k0 < 2) throw InputError("dense_bound_terms requires k0 >= 2");
  if (static_cast<std::int64_t>(set.size()) != n || set.min_element() != 1 || set.max_element() != n) {
    throw InputError("dense_bound_terms is defined for the full interval {1..n}");
  }
  if (!(multiplier > 1.0)) throw InputError("Fejer multiplier R must be > 1");

  const double x = 3.0 * kPi / (2.0 * static_cast<double>(n));
  const double first = 0.5 - 0.5 * dirichlet_kernel(n, x);
  const double second = -static_cast<double>(n + 1) / (2.0 * multiplier);

  const double fejer_length = static_cast<double>(n) * multiplier;
  const Angle theta0(3.0 / (4.0 * static_cast<double>(n)));
  double third = 0.0;
  for (std::int64_t k = 2; k <= k0; ++k) {
    double inner = 0.0;
    for (std::int64_t j = 1; j <= n; ++j) {
      const double weight = 1.0 - static_cast<double>(j * k) / fejer_length;
      if (weight <= 0.0) continue;
      inner += weight * std::cos(2.0 * kPi * Angle::from_multiple(j * k, theta0).value);
    }
    third -= std::abs(inner) / static_cast<double>(k);
  }
  return {first, second, third};
}

CosineMinResult cosine_min(const FrequencySet& set, const GridSpec& grid, int threads) {
  const std::size_t grid_size =
      grid.size != 0 ? grid.size
                     : detail::default_band_grid(set.max_element(), set.size(), grid.oversample);
  if (grid_size < 2) throw InputError("cosine_min grid must have size >= 2");
  if (grid_size > kDefaultTableCap) throw AllocationCap("cosine_min grid exceeds the table cap");

  // Scan maximizes -f over the grid through a negated cosine table.
  std::vector<double> table(grid_size);
  for (std::size_t m = 0; m < grid_size; ++m) {
    table[m] = -std::cos(2.0 * kPi * static_cast<double>(m) / static_cast<double>(grid_size));
  }
  const auto candidates = detail::scan_table_sum_max(table, set, 16, threads);

  auto neg_f = [&](double x) {
    double total = 0.0;
    for (const std::int64_t a : set) {
      total -= std::cos(2.0 * kPi * Angle::from_multiple(a, Angle(x)).value);
    }
    return total;
  };
  auto neg_df = [&](double x) {
    double total = 0.0;
    for (const std::int64_t a : set) {
      total += 2.0 * kPi * static_cast<double>(a) *
               std::sin(2.0 * kPi * Angle::from_multiple(a, Angle(x)).value);
    }
    return total;
  };
  auto neg_ddf = [&](double x) {
    double total = 0.0;
    for (const std::int64_t a : set) {
      const double da = static_cast<double>(a);
      total += 4.0 * kPi * kPi * da * da *
               std::cos(2.0 * kPi * Angle::from_multiple(a, Angle(x)).value);
    }
    return total;
  };

  double best = -std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  const double h = 1.0 / static_cast<double>(grid_size);
  for (const auto& cand : candidates) {
    const double theta0 = static_cast<double>(cand.index) * h;
    const auto refined =
        detail::refine_maximum(neg_f, neg_df, neg_ddf, theta0 - h, theta0 + h, theta0, 64, 1e-13);
    const double value = std::max(refined.value, cand.value);
    const double theta = refined.value >= cand.value ? refined.theta : theta0;
    if (value > best) {
      best = value;
      best_theta = theta;
    }
  }

  CosineMinResult out;
  out.min_value = -best;
  out.argmin_theta = Angle(best_theta);
  out.negated = best;
  return out;
}

}  // namespace trigprod
