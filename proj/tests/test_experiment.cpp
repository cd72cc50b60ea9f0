#include <doctest.h>

#include <regex>

#include "trigprod/experiment.hpp"

using namespace trigprod;

TEST_CASE("experiment records round-trip through JSON") {
  ExperimentRecord r;
  r.command = "eval";
  r.params = {{"set_file", "a.txt"}, {"grid_size", 4096}, {"certified", true}};
  r.seed = 12345;
  r.started_at = "2026-01-02T03:04:05Z";
  r.finished_at = "2026-01-02T03:04:06Z";
  r.outputs = {{"log_max_found", 1.1246}, {"M", 3.0792014}};

  const auto j = r.to_json();
  const auto back = ExperimentRecord::from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.command == r.command);
  CHECK(back.params == r.params);
  CHECK(back.seed == r.seed);
  CHECK(back.started_at == r.started_at);
  CHECK(back.finished_at == r.finished_at);
  CHECK(back.outputs == r.outputs);
  CHECK(back.tool_version == r.tool_version);
  CHECK(back.to_json().dump() == j.dump());
}

TEST_CASE("timestamps are RFC 3339 UTC") {
  const std::string now = rfc3339_utc_now();
  const std::regex pattern(R"(^\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z$)");
  CHECK(std::regex_match(now, pattern));
}
