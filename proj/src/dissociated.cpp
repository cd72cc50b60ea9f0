#include "trigprod/dissociated.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_map>

namespace trigprod {

SignedSumTable SignedSumTable::empty() {
  SignedSumTable t;
  t.total = 0;
  t.counts.assign(1, 1);  // the empty signed sum reaches 0 exactly once
  return t;
}

std::uint8_t SignedSumTable::count(std::int64_t sum) const {
  if (sum < -total || sum > total) return 0;
  return counts[static_cast<std::size_t>(sum + total)];
}

void SignedSumTable::add_element(std::int64_t d) {
  if (d < 1) throw InputError("signed-sum elements must be positive");
  const std::int64_t new_total = total + d;
  std::vector<std::uint8_t> next(static_cast<std::size_t>(2 * new_total) + 1, 0);
  for (std::int64_t s = -total; s <= total; ++s) {
    const std::uint8_t c = counts[static_cast<std::size_t>(s + total)];
    if (c == 0) continue;
    for (const std::int64_t shift : {std::int64_t{0}, d, -d}) {
      std::uint8_t& slot = next[static_cast<std::size_t>(s + shift + new_total)];
      slot = static_cast<std::uint8_t>(std::min<int>(2, slot + c));
    }
  }
  total = new_total;
  counts = std::move(next);
}

namespace {

void normalize_sign(std::vector<std::int8_t>& eps) {
  for (const std::int8_t e : eps) {
    if (e == 0) continue;
    if (e < 0) {
      for (std::int8_t& x : eps) x = static_cast<std::int8_t>(-x);
    }
    return;
  }
}

// Reconstructs one nontrivial representation of 0 from the per-prefix count
// tables, fetched through table_at(i) = counts over the first i elements;
// table_at(m).count(0) >= 2 must hold. Walking from the last element down,
// eps = 0 is preferred, then +1, then -1; "still trivial" prefixes must keep
// two representations in reach so the result cannot collapse to all zeros.
std::vector<std::int8_t> reconstruct_witness(
    const std::vector<std::int64_t>& elements,
    const std::function<const SignedSumTable&(std::size_t)>& table_at) {
  const std::size_t m = elements.size();
  std::vector<std::int8_t> eps(m, 0);
  std::int64_t target = 0;
  bool all_zero = true;
  for (std::size_t i = m; i-- > 0;) {
    const SignedSumTable& prefix = table_at(i);
    bool stepped = false;
    for (const std::int8_t e : {std::int8_t{0}, std::int8_t{1}, std::int8_t{-1}}) {
      const std::int64_t rest = target - e * elements[i];
      const int needed = (all_zero && e == 0) ? 2 : 1;
      if (prefix.count(rest) >= needed) {
        eps[i] = e;
        target = rest;
        all_zero = all_zero && e == 0;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw Error("witness reconstruction lost the relation");
  }
  normalize_sign(eps);
  return eps;
}

DissociationWitness dissociated_by_table(const std::vector<std::int64_t>& elements,
                                         const DissocOptions& opts) {
  // Snapshots per prefix make reconstruction one pass; when they would not
  // fit the cap, keep only the final table and rebuild each prefix on demand
  // (O(m^2 T) time, O(T) memory).
  std::size_t snapshot_bytes = 1;
  {
    std::int64_t prefix_sum = 0;
    for (const std::int64_t d : elements) {
      prefix_sum += d;
      snapshot_bytes += static_cast<std::size_t>(2 * prefix_sum) + 1;
    }
  }
  const bool have_snapshots = snapshot_bytes <= opts.snapshot_byte_cap;

  std::vector<SignedSumTable> tables;
  tables.push_back(SignedSumTable::empty());
  if (have_snapshots) {
    tables.reserve(elements.size() + 1);
    for (const std::int64_t d : elements) {
      SignedSumTable next = tables.back();
      next.add_element(d);
      tables.push_back(std::move(next));
    }
  } else {
    for (const std::int64_t d : elements) tables.back().add_element(d);
  }

  DissociationWitness out;
  if (tables.back().count(0) <= 1) {
    out.verdict = DissociationVerdict::dissociated;
    return out;
  }
  out.verdict = DissociationVerdict::relation;

  if (have_snapshots) {
    out.epsilons = reconstruct_witness(
        elements, [&](std::size_t i) -> const SignedSumTable& { return tables[i]; });
  } else {
    SignedSumTable scratch = SignedSumTable::empty();
    out.epsilons = reconstruct_witness(elements, [&](std::size_t i) -> const SignedSumTable& {
      scratch = SignedSumTable::empty();
      for (std::size_t k = 0; k < i; ++k) scratch.add_element(elements[k]);
      return scratch;
    });
  }
  return out;
}

DissociationWitness dissociated_by_mitm(const std::vector<std::int64_t>& elements,
                                        const DissocOptions& opts) {
  const std::size_t m = elements.size();
  if (m > static_cast<std::size_t>(opts.mitm_max_size)) {
    throw SumCap("set too large for both the table and meet-in-the-middle methods");
  }
  const std::size_t half = m / 2;

  // Enumerate signed sums of the first half; keep up to two representative
  // epsilon vectors per sum (trivial and one nontrivial is always enough).
  struct Reps {
    std::vector<std::vector<std::int8_t>> vecs;
  };
  std::unordered_map<std::int64_t, Reps> first_half;
  std::vector<std::int8_t> combo(half, 0);
  auto enumerate_first = [&](auto&& self, std::size_t idx, std::int64_t sum) -> void {
    if (idx == half) {
      Reps& reps = first_half[sum];
      if (reps.vecs.size() < 2) reps.vecs.emplace_back(combo.begin(), combo.end());
      return;
    }
    for (const std::int8_t e : {std::int8_t{0}, std::int8_t{1}, std::int8_t{-1}}) {
      combo[idx] = e;
      self(self, idx + 1, sum + e * elements[idx]);
    }
    combo[idx] = 0;
  };
  enumerate_first(enumerate_first, 0, 0);

  DissociationWitness out;
  std::vector<std::int8_t> tail(m - half, 0);
  auto search_second = [&](auto&& self, std::size_t idx, std::int64_t sum) -> bool {
    if (idx == m - half) {
      const auto it = first_half.find(-sum);
      if (it == first_half.end()) return false;
      const bool tail_nonzero = std::any_of(tail.begin(), tail.end(),
                                            [](std::int8_t e) { return e != 0; });
      for (const auto& head : it->second.vecs) {
        const bool head_nonzero = std::any_of(head.begin(), head.end(),
                                              [](std::int8_t e) { return e != 0; });
        if (!head_nonzero && !tail_nonzero) continue;
        out.epsilons.assign(m, 0);
        std::copy(head.begin(), head.end(), out.epsilons.begin());
        std::copy(tail.begin(), tail.end(), out.epsilons.begin() + static_cast<std::ptrdiff_t>(half));
        return true;
      }
      return false;
    }
    for (const std::int8_t e : {std::int8_t{0}, std::int8_t{1}, std::int8_t{-1}}) {
      tail[idx] = e;
      if (self(self, idx + 1, sum + e * elements[half + idx])) return true;
    }
    tail[idx] = 0;
    return false;
  };

  if (search_second(search_second, 0, 0)) {
    out.verdict = DissociationVerdict::relation;
    normalize_sign(out.epsilons);
  } else {
    out.verdict = DissociationVerdict::dissociated;
  }
  return out;
}

}  // namespace

DissociationWitness is_dissociated(const FrequencySet& set, const DissocOptions& opts) {
  const std::vector<std::int64_t>& elements = set.elements();
  if (set.sum() <= opts.table_sum_cap) return dissociated_by_table(elements, opts);
  return dissociated_by_mitm(elements, opts);
}

FrequencySet max_dissociated_greedy(const FrequencySet& set, ScanOrder order,
                                    const DissocOptions& opts) {
  std::vector<std::int64_t> scan = set.elements();
  if (order == ScanOrder::descending) std::reverse(scan.begin(), scan.end());

  SignedSumTable state = SignedSumTable::empty();
  std::vector<std::int64_t> kept;
  for (const std::int64_t d : scan) {
    // A relation in kept + {d} must use d (kept alone is dissociated), i.e.
    // some signed sum of kept equals +-d; the table is symmetric, one lookup
    // suffices.
    if (state.count(d) >= 1) continue;
    if (state.total + d > opts.table_sum_cap) {
      throw SumCap("greedy signed-sum state exceeds the table cap");
    }
    state.add_element(d);
    kept.push_back(d);
  }
  std::sort(kept.begin(), kept.end());
  return FrequencySet(std::move(kept));
}

DissociatedDiag dissociated_diag(const FrequencySet& set, std::int64_t ambient_n,
                                 const SupNormOptions& eval_opts, const DissocOptions& opts) {
  if (ambient_n < 2) throw InputError("dissociated_diag requires ambient n >= 2");
  const FrequencySet ascending = max_dissociated_greedy(set, ScanOrder::ascending, opts);
  const FrequencySet descending = max_dissociated_greedy(set, ScanOrder::descending, opts);
  const FrequencySet& best = ascending.size() >= descending.size() ? ascending : descending;

  DissociatedDiag out{best.size(),
                      std::sqrt(static_cast<double>(best.size())) /
                          std::sqrt(std::log(static_cast<double>(ambient_n))),
                      sup_norm(set, eval_opts).log_max_found, best};
  return out;
}

}  // namespace trigprod
