#include "trigprod/frequency_set.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace trigprod {

FrequencySet::FrequencySet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw InputError("frequency set must contain at least one element");
  std::int64_t prev = 0;
  for (const std::int64_t a : elements_) {
    if (a < 1) throw InputError("frequency set elements must be positive");
    if (a <= prev) throw InputError("frequency set elements must be strictly increasing");
    prev = a;
  }
}

std::int64_t FrequencySet::max_element() const {
  if (elements_.empty()) throw InputError("frequency set is empty");
  return elements_.back();
}

std::int64_t FrequencySet::min_element() const {
  if (elements_.empty()) throw InputError("frequency set is empty");
  return elements_.front();
}

std::int64_t FrequencySet::sum() const {
  return std::accumulate(elements_.begin(), elements_.end(), std::int64_t{0});
}

bool FrequencySet::contains(std::int64_t a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

FrequencySet parse_set_file(std::istream& in) {
  std::vector<std::int64_t> elements;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::int64_t value = 0;
    std::size_t consumed = 0;
    try {
      value = std::stoll(std::string(body), &consumed);
    } catch (const std::exception&) {
      throw ParseError("set file line " + std::to_string(line_no) + ": not an integer");
    }
    if (consumed != body.size()) {
      throw ParseError("set file line " + std::to_string(line_no) + ": trailing characters");
    }
    elements.push_back(value);
  }
  try {
    return FrequencySet(std::move(elements));
  } catch (const InputError& e) {
    throw ParseError(std::string("set file invalid: ") + e.what());
  }
}

FrequencySet load_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open set file: " + path);
  return parse_set_file(in);
}

void write_set_file(std::ostream& out, const FrequencySet& set) {
  for (const std::int64_t a : set) out << a << '\n';
}

void save_set_file(const std::string& path, const FrequencySet& set) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write set file: " + path);
  write_set_file(out, set);
}

}  // namespace trigprod
