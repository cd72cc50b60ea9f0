#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "trigprod/errors.hpp"

namespace trigprod {

// Strictly increasing set of positive integer frequencies {a_1 < ... < a_n}.
class FrequencySet {
public:
  using value_type = std::int64_t;
  using const_iterator = std::vector<std::int64_t>::const_iterator;

  // Empty placeholder; every operation in the library requires a nonempty set,
  // which only the validating constructor below can produce.
  FrequencySet() = default;

  // Validates: nonempty, every element >= 1, strictly increasing.
  explicit FrequencySet(std::vector<std::int64_t> elements);

  bool empty() const { return elements_.empty(); }
  std::size_t size() const { return elements_.size(); }
  std::int64_t max_element() const;
  std::int64_t min_element() const;
  std::int64_t sum() const;
  std::int64_t operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<std::int64_t>& elements() const { return elements_; }
  const_iterator begin() const { return elements_.begin(); }
  const_iterator end() const { return elements_.end(); }
  bool contains(std::int64_t a) const;

  bool operator==(const FrequencySet&) const = default;

private:
  std::vector<std::int64_t> elements_;
};

// Set file format shared by every tool: ASCII, one positive integer per line,
// strictly increasing; lines starting with '#' are comments; blank lines are
// ignored.
FrequencySet parse_set_file(std::istream& in);
FrequencySet load_set_file(const std::string& path);
void write_set_file(std::ostream& out, const FrequencySet& set);
void save_set_file(const std::string& path, const FrequencySet& set);

}  // namespace trigprod
