// End-to-end checks of the trigprod binary: output values, exit-code
// contract, determinism of JSONL records.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

int g_failures = 0;

void check(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "[ok] " << what << '\n';
  } else {
    ++g_failures;
    std::cout << "[FAILED] " << what << '\n';
  }
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, const fs::path& dir) {
  const fs::path out_path = dir / "stdout.txt";
  const std::string command =
      std::string(TRIGPROD_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path);
  out << contents;
}

// JSONL contents with the volatile timestamp fields removed.
std::string stable_jsonl(const fs::path& path) {
  std::ifstream in(path);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    j.erase("started_at");
    j.erase("finished_at");
    out += j.dump();
    out += '\n';
  }
  return out;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() / "trigprod_cli_tests";
  fs::remove_all(dir);
  fs::create_directories(dir);

  const fs::path one = dir / "one.txt";
  write_file(one, "1\n");
  const fs::path pair = dir / "pair.txt";
  write_file(pair, "# the pair\n1\n2\n");
  const fs::path triple = dir / "triple.txt";
  write_file(triple, "1\n2\n3\n");
  const fs::path bad = dir / "bad.txt";
  write_file(bad, "3\n2\n");
  const fs::path garbled = dir / "garbled.txt";
  write_file(garbled, "1\ntwo\n");

  {
    const auto r = run_cli("eval " + one.string() + " --json", dir);
    check(r.exit_code == 0, "eval {1} exits 0");
    const json j = json::parse(r.output);
    check(std::abs(j["M"].get<double>() - 2.0) < 1e-9, "eval {1} finds M = 2");
    check(std::abs(j["argmax_theta"].get<double>() - 0.5) < 1e-9, "eval {1} argmax 1/2");
  }
  {
    const auto r = run_cli("eval " + pair.string() + " --certified --gap 1e-6 --json", dir);
    check(r.exit_code == 0, "certified eval {1,2} exits 0");
    const json j = json::parse(r.output);
    const double target = 16.0 / (3.0 * std::sqrt(3.0));
    check(std::abs(j["M"].get<double>() - target) < 1e-6, "certified eval {1,2} brackets 16/(3 sqrt 3)");
    check(j["gap_reached"].get<bool>(), "certified eval {1,2} reaches the gap");
    check(j["certified_M_upper"].get<double>() >= target - 1e-12, "upper end covers the closed form");
  }
  {
    const auto r = run_cli("eval " + bad.string(), dir);
    check(r.exit_code == 2, "non-increasing set file exits 2");
    const auto r2 = run_cli("eval " + garbled.string(), dir);
    check(r2.exit_code == 2, "garbled set file exits 2");
    const auto r3 = run_cli("eval " + (dir / "missing.txt").string(), dir);
    check(r3.exit_code == 2, "missing set file exits 2");
  }
  {
    // DegreeCap: sum of frequencies above the default cap.
    const fs::path big = dir / "big.txt";
    write_file(big, "100001\n");
    const auto r = run_cli("eval " + big.string() + " --certified", dir);
    check(r.exit_code == 3, "degree cap exits 3");
  }
  {
    // Unreachable gap: bracket returned, resource exit.
    const auto r = run_cli("eval " + pair.string() + " --certified --gap 1e-18", dir);
    check(r.exit_code == 3, "unreachable gap exits 3");
  }

  {
    // Identical flags twice; only the JSONL destination (not a recorded
    // param) differs between runs.
    const fs::path log_a = dir / "construct_a.jsonl";
    const fs::path log_b = dir / "construct_b.jsonl";
    const fs::path out_best = dir / "best.txt";
    const std::string base =
        "construct --n 64 --trials 4 --seed 7 --grid-size 4096 --out " + out_best.string();
    const auto ra = run_cli(base + " --log " + log_a.string(), dir);
    auto slurp = [](const fs::path& p) {
      std::ifstream f(p);
      return std::string((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    };
    const std::string stdout_a = ra.output;
    const std::string sa = slurp(out_best);
    const auto rb = run_cli(base + " --log " + log_b.string(), dir);
    const std::string sb = slurp(out_best);
    check(ra.exit_code == 0 && rb.exit_code == 0, "construct exits 0");
    check(stable_jsonl(log_a) == stable_jsonl(log_b), "construct JSONL identical modulo timestamps");
    check(!sa.empty() && sa == sb, "construct best-set files identical");
    check(stdout_a == rb.output, "construct stdout identical");

    const auto bad_n = run_cli("construct --n 1 --trials 2 --seed 1", dir);
    check(bad_n.exit_code == 2, "construct --n 1 exits 2");
    const auto bad_obj = run_cli("construct --n 8 --trials 1 --seed 1 --objective foo", dir);
    check(bad_obj.exit_code == 2, "unknown objective exits 2");
  }

  {
    const auto r = run_cli(
        "certify-lower " + pair.string() + " --n 2 --R 2 --theta0 0.375 --json", dir);
    check(r.exit_code == 0, "certify-lower exits 0");
    const json j = json::parse(r.output);
    check(std::abs(j["value"].get<double>() - std::sqrt(2.0) / 3.0) < 1e-12,
          "certify-lower hand value sqrt(2)/3");
    const auto r2 = run_cli("certify-lower " + triple.string() + " --n 2 --R 8", dir);
    check(r2.exit_code == 2, "set outside {1..n} exits 2");
  }

  {
    const auto r = run_cli("dissociate " + triple.string() + " --witness", dir);
    check(r.exit_code == 0, "dissociate exits 0");
    check(contains(r.output, "relation 1+2-3=0"), "dissociate {1,2,3} prints the relation");

    const fs::path powers = dir / "powers.txt";
    write_file(powers, "1\n2\n4\n8\n");
    const auto r2 = run_cli("dissociate " + powers.string(), dir);
    check(contains(r2.output, "dissociated"), "dissociate {1,2,4,8} verdict");

    const fs::path trip = dir / "trip.txt";
    write_file(trip, "3\n5\n7\n15\n");
    const auto r3 = run_cli("dissociate " + trip.string() + " --witness --json", dir);
    const json j = json::parse(r3.output);
    check(j["verdict"] == "relation" && j["witness"] == "3+5+7-15=0",
          "dissociate {3,5,7,15} witness");
    const auto r4 = run_cli("dissociate " + triple.string() + " --order sideways", dir);
    check(r4.exit_code == 2, "unknown order exits 2");
  }

  {
    const auto r = run_cli("scan-interval --n-from 1 --n-to 8", dir);
    check(r.exit_code == 0, "scan-interval exits 0");
    std::istringstream lines(r.output);
    std::string line;
    std::getline(lines, line);
    check(line == "n,log_M,M,M_pow_1_over_n,argmax_theta", "scan-interval CSV header");
    std::vector<std::string> rows;
    while (std::getline(lines, line)) {
      if (!line.empty()) rows.push_back(line);
    }
    check(rows.size() == 8, "scan-interval row count");
    check(rows[0].rfind("1,", 0) == 0 && contains(rows[0], ",2,2,"), "scan-interval n=1 row");

    const auto rj = run_cli("scan-interval --n-from 2 --n-to 2 --json", dir);
    const json j = json::parse(rj.output);
    check(std::abs(j["M_pow_1_over_n"].get<double>() - 1.75476535051) < 1e-6,
          "scan-interval n=2 root value");
    const auto bad_range = run_cli("scan-interval --n-from 5 --n-to 2", dir);
    check(bad_range.exit_code == 2, "reversed range exits 2");
  }

  {
    const auto r = run_cli("spectra " + triple.string() + " --t 6 --r 2 --json", dir);
    check(r.exit_code == 0, "spectra exits 0");
    const json j = json::parse(r.output);
    check(j["G_hat"] == "-1/6", "spectra G_hat fraction");
    check(j["G_hat_bound"] == "2/3", "spectra bound fraction");
    check(j["H_hat"] == "-1/6", "spectra H_hat fraction");
    const auto r2 = run_cli("spectra " + triple.string() + " --t 2 --r 2 --json", dir);
    check(json::parse(r2.output)["H_hat"] == "-1/2", "spectra H_hat at t=2");
    const auto r3 = run_cli("spectra " + triple.string() + " --t 0 --r 2", dir);
    check(r3.exit_code == 2, "spectra t=0 exits 2");
  }

  {
    // Chunked scans merge in chunk order, so the worker count never changes
    // the result.
    const fs::path set31 = dir / "mixed.txt";
    write_file(set31, "3\n11\n31\n97\n");
    const auto t1 = run_cli("--threads 1 eval " + set31.string() + " --json", dir);
    const auto t3 = run_cli("--threads 3 eval " + set31.string() + " --json", dir);
    check(t1.exit_code == 0 && t3.exit_code == 0 && t1.output == t3.output,
          "eval output identical across worker counts");
  }

  {
    const auto r = run_cli("--version", dir);
    check(r.exit_code == 0 && contains(r.output, "0.1.0"), "--version reports the tool version");
    const auto r2 = run_cli("no-such-command", dir);
    check(r2.exit_code == 2, "unknown subcommand exits 2");
  }

  if (g_failures > 0) {
    std::cout << g_failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
