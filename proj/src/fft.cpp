#include "trigprod/detail/fft.hpp"

#include <cmath>
#include <cstddef>

#include "trigprod/errors.hpp"
#include "trigprod/kernels.hpp"

namespace trigprod::detail {

void fft_pow2(std::vector<std::complex<double>>& x, int sign) {
  const std::size_t n = x.size();
  if (n == 0 || (n & (n - 1)) != 0) throw InputError("fft_pow2 requires a power-of-two length");
  if (n == 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }

  // Twiddles for the final stage; earlier stages stride through the table.
  std::vector<std::complex<double>> twiddle(n / 2);
  const double unit = sign * 2.0 * kPi / static_cast<double>(n);
  for (std::size_t k = 0; k < n / 2; ++k) {
    twiddle[k] = std::polar(1.0, unit * static_cast<double>(k));
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> w = twiddle[k * stride];
        const std::complex<double> u = x[base + k];
        const std::complex<double> v = x[base + k + len / 2] * w;
        x[base + k] = u + v;
        x[base + k + len / 2] = u - v;
      }
    }
  }
}

}  // namespace trigprod::detail
