#include "trigprod/experiment.hpp"

#include <ctime>
#include <fstream>

#include "trigprod/errors.hpp"

namespace trigprod {

nlohmann::json ExperimentRecord::to_json() const {
  return nlohmann::json{{"command", command},     {"params", params},
                        {"seed", seed},           {"started_at", started_at},
                        {"finished_at", finished_at}, {"outputs", outputs},
                        {"tool_version", tool_version}};
}

ExperimentRecord ExperimentRecord::from_json(const nlohmann::json& j) {
  ExperimentRecord r;
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params");
  r.seed = j.at("seed").get<std::uint64_t>();
  r.started_at = j.at("started_at").get<std::string>();
  r.finished_at = j.at("finished_at").get<std::string>();
  r.outputs = j.at("outputs");
  r.tool_version = j.at("tool_version").get<std::string>();
  return r;
}

std::string rfc3339_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

void append_jsonl(const std::string& path, const nlohmann::json& object) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot open log file: " + path);
  out << object.dump() << '\n';
}

}  // namespace trigprod
