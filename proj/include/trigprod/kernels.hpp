#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "trigprod/errors.hpp"

namespace trigprod {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Angles closer than this to an integer are treated as singular points of
// log|1 - e(theta)|: outside the window log(2|sin(pi theta)|) is still finite
// and accurate in double precision, inside it we signal instead of returning
// a huge negative value.
inline constexpr double kSingularEps = 0x1p-52;

// Default cap on grid/table allocations (entries, 8 bytes each).
inline constexpr std::size_t kDefaultTableCap = std::size_t{1} << 26;

// Point on the unit circle stored as the angle of z = e(theta) = e^{2 pi i theta},
// measured in turns. Canonical representative lies in [0, 1).
struct Angle {
  double value = 0.0;

  Angle() = default;
  explicit Angle(double turns);

  // Exact grid angle (index mod size) / size.
  static Angle from_grid_index(std::uint64_t index, std::uint64_t size);

  // frac(a * theta) without the cancellation loss of a plain a*theta - floor:
  // the product is split with an FMA so the reduced angle keeps full precision
  // even when a * theta is large.
  static Angle from_multiple(std::int64_t a, Angle theta);
};

// Equispaced evaluation grid {g / size : 0 <= g < size}. size == 0 lets the
// calling operation apply its default sizing rule, scaled by `oversample`.
struct GridSpec {
  std::size_t size = 0;
  double oversample = 16.0;
};

// log|1 - e(theta)| = log(2 |sin(pi theta)|). Throws SingularPoint when theta
// is within kSingularEps of an integer.
double log_abs_one_minus(Angle theta);

// Fejer kernel F_n(theta) = 2 sum_{0<j<n} (1 - j/n) cos(2 pi j theta) + 1,
// evaluated through the closed form sin^2(pi n theta) / (n sin^2(pi theta)).
// Nonnegative by construction; F_n(0) = n.
double fejer_kernel(std::int64_t n, Angle theta);

// Dirichlet kernel D_n(x) = sin((n + 1/2) x) / sin(x / 2) with x in radians;
// the removable singularity at x = 0 (mod 2 pi) evaluates to 2n + 1.
double dirichlet_kernel(std::int64_t n, double x_radians);

// T[m] = log|1 - e(m/G)| for m = 1..G-1, with T[0] = -infinity as sentinel.
// Shares the code path of log_abs_one_minus, so table lookups and direct
// evaluation agree exactly. Grid evaluation of F_S then reduces to
// sum_j T[(a_j * g) mod G].
std::vector<double> log_table(const GridSpec& grid, std::size_t cap = kDefaultTableCap);

}  // namespace trigprod
