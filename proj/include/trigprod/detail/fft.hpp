#pragma once

#include <complex>
#include <vector>

namespace trigprod::detail {

// In-place iterative radix-2 transform; x.size() must be a power of two.
// sign = -1: forward DFT with kernel e^{-2 pi i jk / N} (unnormalized);
// sign = +1: inverse kernel (also unnormalized).
void fft_pow2(std::vector<std::complex<double>>& x, int sign);

}  // namespace trigprod::detail
