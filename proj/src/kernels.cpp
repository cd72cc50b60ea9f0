#include "trigprod/kernels.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace trigprod {

Angle::Angle(double turns) {
  if (!std::isfinite(turns)) throw InputError("angle must be finite");
  double f = turns - std::floor(turns);
  if (f >= 1.0) f = 0.0;  // floor rounding can land exactly on 1 for tiny negatives
  value = f;
}

Angle Angle::from_grid_index(std::uint64_t index, std::uint64_t size) {
  if (size < 2) throw InputError("grid size must be >= 2");
  Angle a;
  a.value = static_cast<double>(index % size) / static_cast<double>(size);
  return a;
}

Angle Angle::from_multiple(std::int64_t a, Angle theta) {
  const double hi = static_cast<double>(a) * theta.value;
  const double lo = std::fma(static_cast<double>(a), theta.value, -hi);
  double f = (hi - std::floor(hi)) + lo;
  if (f < 0.0) f += 1.0;
  if (f >= 1.0) f -= 1.0;
  Angle r;
  r.value = f;
  return r;
}

double log_abs_one_minus(Angle theta) {
  const double d = std::min(theta.value, 1.0 - theta.value);
  if (!(d >= kSingularEps)) {
    throw SingularPoint("log|1 - e(theta)| diverges at theta = " + std::to_string(theta.value));
  }
  return std::log(2.0 * std::sin(kPi * theta.value));
}

double fejer_kernel(std::int64_t n, Angle theta) {
  if (n < 1) throw InputError("fejer_kernel requires n >= 1");
  const double d = std::min(theta.value, 1.0 - theta.value);
  if (d < kSingularEps) return static_cast<double>(n);
  const double num = std::sin(kPi * Angle::from_multiple(n, theta).value);
  const double den = std::sin(kPi * theta.value);
  const double ratio = num / den;
  return ratio * ratio / static_cast<double>(n);
}

double dirichlet_kernel(std::int64_t n, double x_radians) {
  if (n < 1) throw InputError("dirichlet_kernel requires n >= 1");
  if (!std::isfinite(x_radians)) throw InputError("dirichlet_kernel requires finite x");
  const double t = std::remainder(x_radians, 2.0 * kPi);
  const double den = std::sin(0.5 * t);
  if (den == 0.0) return static_cast<double>(2 * n + 1);
  return std::sin((static_cast<double>(n) + 0.5) * t) / den;
}

std::vector<double> log_table(const GridSpec& grid, std::size_t cap) {
  const std::size_t size = grid.size;
  if (size < 2) throw InputError("log_table requires an explicit grid size >= 2");
  if (size > cap) {
    throw AllocationCap("log_table size " + std::to_string(size) + " exceeds cap " +
                        std::to_string(cap));
  }
  std::vector<double> table(size);
  table[0] = -std::numeric_limits<double>::infinity();
  for (std::size_t m = 1; m < size; ++m) {
    table[m] = log_abs_one_minus(Angle::from_grid_index(m, size));
  }
  return table;
}

}  // namespace trigprod
