#pragma once

#include <cstdint>
#include <vector>

#include "trigprod/frequency_set.hpp"
#include "trigprod/product.hpp"

namespace trigprod {

enum class DissociationVerdict { dissociated, relation };
enum class ScanOrder { ascending, descending };

// Verdict plus, for a relation, one explicit nontrivial relation
// sum_i eps_i d_i = 0 with eps_i in {-1, 0, 1}, indexed like the input
// elements (ascending) and normalized so the first nonzero eps is +1.
struct DissociationWitness {
  DissociationVerdict verdict = DissociationVerdict::dissociated;
  std::vector<std::int8_t> epsilons;

  bool is_relation() const { return verdict == DissociationVerdict::relation; }
};

// Representation-count table over signed subset sums of the processed
// elements; counts are capped at 2 since only "exactly one vs. more"
// representations of a sum ever matters.
struct SignedSumTable {
  std::int64_t total = 0;              // T = sum of processed elements
  std::vector<std::uint8_t> counts;    // index s + total, size 2T + 1

  static SignedSumTable empty();
  std::uint8_t count(std::int64_t sum) const;
  void add_element(std::int64_t d);    // extends the range and convolves
};

struct DissocOptions {
  std::int64_t table_sum_cap = 10000000;   // table method: cap on sum d_i
  int mitm_max_size = 24;                  // meet-in-the-middle: cap on m
  std::size_t snapshot_byte_cap = std::size_t{1} << 28;
};

// Dissociated iff zero has exactly one {-1,0,1}-representation (the trivial
// one). Table method while sum d_i fits the cap, meet-in-the-middle beyond;
// SumCap when both are out of reach. Witness reconstruction walks the
// per-element tables from sum 0 backwards, preferring eps = 0 branches, so a
// given input always yields the same witness.
DissociationWitness is_dissociated(const FrequencySet& set, const DissocOptions& opts = {});

// Greedy maximal (not maximum) dissociated subset: scans S in the given
// order, keeping an element iff the kept set stays dissociated; the signed-sum
// state is extended incrementally, so each candidate costs one table lookup.
FrequencySet max_dissociated_greedy(const FrequencySet& set, ScanOrder order,
                                    const DissocOptions& opts = {});

// Report-only comparison of the greedy dissociated size m against the
// heuristic scale sqrt(m)/sqrt(log n) and the measured log M(S).
struct DissociatedDiag {
  std::size_t m = 0;
  double scale = 0.0;
  double log_m_measured = 0.0;
  FrequencySet best_subset;
};

DissociatedDiag dissociated_diag(const FrequencySet& set, std::int64_t ambient_n,
                                 const SupNormOptions& eval_opts = {},
                                 const DissocOptions& opts = {});

}  // namespace trigprod
