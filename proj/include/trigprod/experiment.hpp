#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace trigprod {

inline constexpr const char* kToolVersion = "0.1.0";

// One CLI run, serialized as a single JSON object per line. Re-running with
// identical params and seed reproduces identical `outputs`; only the
// timestamps differ.
struct ExperimentRecord {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::string started_at;   // RFC 3339 UTC
  std::string finished_at;  // RFC 3339 UTC
  nlohmann::json outputs = nlohmann::json::object();
  std::string tool_version = kToolVersion;

  nlohmann::json to_json() const;
  static ExperimentRecord from_json(const nlohmann::json& j);
};

std::string rfc3339_utc_now();

// Appends one compact JSON line.
void append_jsonl(const std::string& path, const nlohmann::json& object);

}  // namespace trigprod
