#include "trigprod/detail/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "trigprod/errors.hpp"
#include "trigprod/parallel.hpp"

namespace trigprod::detail {

namespace {

constexpr std::size_t kScanChunk = std::size_t{1} << 14;

// Keeps the k best (value, index) pairs, preferring larger value and then
// smaller index. Insertion sort on a tiny fixed-size buffer.
struct TopK {
  explicit TopK(std::size_t k) : cap(k) { entries.reserve(k); }

  void offer(double value, std::uint64_t index) {
    if (!std::isfinite(value)) return;
    if (entries.size() == cap) {
      const GridCandidate& worst = entries.back();
      if (value < worst.value || (value == worst.value && index > worst.index)) return;
      entries.pop_back();
    }
    GridCandidate c{value, index};
    auto pos = std::lower_bound(entries.begin(), entries.end(), c, [](const auto& a, const auto& b) {
      return a.value > b.value || (a.value == b.value && a.index < b.index);
    });
    entries.insert(pos, c);
  }

  std::size_t cap;
  std::vector<GridCandidate> entries;
};

}  // namespace

std::size_t default_band_grid(std::int64_t max_freq, std::size_t n_terms, double oversample) {
  if (!(oversample > 0)) throw InputError("grid oversample factor must be positive");
  const double target = oversample * static_cast<double>(max_freq) *
                        std::ceil(std::sqrt(static_cast<double>(n_terms)));
  const double clamped = std::max(16.0, std::min(target, 9.0e15));
  std::size_t g = 16;
  while (g < static_cast<std::size_t>(clamped)) g <<= 1;
  return g;
}

std::vector<GridCandidate> scan_table_sum_max(const std::vector<double>& table,
                                              const FrequencySet& set, std::size_t top_k,
                                              int threads) {
  const std::size_t grid = table.size();
  if (grid < 2) throw InputError("scan grid must have size >= 2");
  if (top_k == 0) top_k = 1;

  const std::size_t n_chunks = (grid + kScanChunk - 1) / kScanChunk;
  std::vector<TopK> per_chunk(n_chunks, TopK(top_k));

  for_each_chunk(grid, kScanChunk, threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    std::vector<double> acc(end - begin, 0.0);
    for (const std::int64_t a : set) {
      const std::uint64_t step = static_cast<std::uint64_t>(a) % grid;
      std::uint64_t idx = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(step) * begin % grid);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        acc[i] += table[idx];
        idx += step;
        if (idx >= grid) idx -= grid;
      }
    }
    TopK& local = per_chunk[chunk];
    for (std::size_t i = 0; i < acc.size(); ++i) {
      local.offer(acc[i], static_cast<std::uint64_t>(begin + i));
    }
  });

  TopK merged(top_k);
  for (const TopK& local : per_chunk) {
    for (const GridCandidate& c : local.entries) merged.offer(c.value, c.index);
  }
  return merged.entries;
}

RefineResult refine_maximum(const std::function<double(double)>& f,
                            const std::function<double(double)>& df,
                            const std::function<double(double)>& ddf, double lo, double hi,
                            double x0, int max_iters, double xtol) {
  const double neg_inf = -std::numeric_limits<double>::infinity();
  auto value_at = [&](double x) {
    try {
      const double v = f(x);
      return std::isfinite(v) ? v : neg_inf;
    } catch (const SingularPoint&) {
      return neg_inf;
    }
  };
  auto slope_at = [&](double x, bool& ok) {
    try {
      const double v = df(x);
      ok = std::isfinite(v);
      return v;
    } catch (const SingularPoint&) {
      ok = false;
      return 0.0;
    }
  };

  RefineResult best{x0, value_at(x0), 0};

  // Establish a sign-change bracket for df inside [lo, hi]; nudge endpoints
  // inward when they sit on singular points.
  double a = lo, b = hi;
  const double width = hi - lo;
  bool ok_a = false, ok_b = false;
  double da = 0, db = 0;
  for (int tries = 0; tries < 4 && !ok_a; ++tries) {
    da = slope_at(a, ok_a);
    if (!ok_a) a += 0x1p-20 * width;
  }
  for (int tries = 0; tries < 4 && !ok_b; ++tries) {
    db = slope_at(b, ok_b);
    if (!ok_b) b -= 0x1p-20 * width;
  }

  if (!ok_a || !ok_b || da <= 0.0 || db >= 0.0) {
    // No interior critical bracket: the maximum over [lo, hi] sits at the
    // better of the probed endpoints and the seed.
    for (double x : {a, b}) {
      const double v = value_at(x);
      if (v > best.value) best = {x, v, best.steps};
    }
    return best;
  }

  double x = x0;
  if (!(x > a && x < b)) x = 0.5 * (a + b);
  for (int it = 0; it < max_iters; ++it) {
    ++best.steps;
    bool ok = false;
    const double d1 = slope_at(x, ok);
    double next = std::numeric_limits<double>::quiet_NaN();
    if (ok) {
      if (d1 > 0.0) {
        a = x;
      } else if (d1 < 0.0) {
        b = x;
      } else {
        break;  // exact critical point
      }
      try {
        const double d2 = ddf(x);
        if (std::isfinite(d2) && d2 != 0.0) next = x - d1 / d2;
      } catch (const SingularPoint&) {
      }
    }
    if (!(next > a && next < b)) next = 0.5 * (a + b);  // refuse steps leaving the bracket
    if (std::abs(next - x) <= xtol) {
      x = next;
      break;
    }
    x = next;
  }

  const double v = value_at(x);
  if (v > best.value) {
    best.theta = x;
    best.value = v;
  }
  return best;
}

}  // namespace trigprod::detail
