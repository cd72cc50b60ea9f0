#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigprod/bounds.hpp"
#include "trigprod/constructions.hpp"
#include "trigprod/dissociated.hpp"
#include "trigprod/experiment.hpp"
#include "trigprod/frequency_set.hpp"
#include "trigprod/product.hpp"
#include "trigprod/spectra.hpp"

namespace {

using nlohmann::json;
using namespace trigprod;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitResource = 3;

// All printed floating-point values carry 12 significant digits.
std::string fmt12(double x) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

std::string witness_equation(const FrequencySet& set, const std::vector<std::int8_t>& eps) {
  std::string out;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i] == 0) continue;
    if (eps[i] > 0 && !out.empty()) out += '+';
    if (eps[i] < 0) out += '-';
    out += std::to_string(set[i]);
  }
  out += "=0";
  return out;
}

struct RecordSink {
  std::string path;  // empty: disabled

  void write(ExperimentRecord record) const {
    if (path.empty()) return;
    append_jsonl(path, record.to_json());
  }
};

struct EvalArgs {
  std::string set_file;
  std::size_t grid_size = 0;
  int refine_iters = 64;
  bool certified = false;
  double gap = 1e-6;
  bool as_json = false;
  std::string log_path;
  int threads = 0;
};

int run_eval(const EvalArgs& args) {
  const FrequencySet set = load_set_file(args.set_file);

  ExperimentRecord record;
  record.command = "eval";
  record.params = {{"set_file", args.set_file},   {"grid_size", args.grid_size},
                   {"refine_iters", args.refine_iters}, {"certified", args.certified},
                   {"gap", args.gap}};
  record.started_at = rfc3339_utc_now();

  SupNormEstimate estimate;
  if (args.certified) {
    estimate = certified_sup(set, args.gap);
  } else {
    SupNormOptions opts;
    opts.grid.size = args.grid_size;
    opts.refine_iters = args.refine_iters;
    opts.threads = args.threads;
    estimate = sup_norm(set, opts);
  }

  json outputs = {{"log_max_found", estimate.log_max_found},
                  {"M", std::exp(estimate.log_max_found)},
                  {"argmax_theta", estimate.argmax_theta.value},
                  {"grid_size", estimate.grid_size},
                  {"refinement_steps", estimate.refinement_steps},
                  {"method", estimate.method == SupNormMethod::exact_coeff ? "exact_coeff"
                                                                           : "grid_refine"}};
  if (estimate.certified_log_upper.has_value()) {
    outputs["certified_log_upper"] = *estimate.certified_log_upper;
    outputs["certified_M_upper"] = std::exp(*estimate.certified_log_upper);
    outputs["gap_reached"] = estimate.gap_reached;
  }

  if (args.as_json) {
    std::cout << outputs.dump() << '\n';
  } else {
    std::cout << "M(S) = " << fmt12(std::exp(estimate.log_max_found)) << '\n';
    std::cout << "log M(S) = " << fmt12(estimate.log_max_found) << '\n';
    std::cout << "argmax theta = " << fmt12(estimate.argmax_theta.value) << '\n';
    if (estimate.certified_log_upper.has_value()) {
      std::cout << "certified bracket (log): [" << fmt12(estimate.log_max_found) << ", "
                << fmt12(*estimate.certified_log_upper) << "]\n";
      if (!estimate.gap_reached) std::cout << "warning: target gap not reached\n";
    }
  }

  record.outputs = outputs;
  record.finished_at = rfc3339_utc_now();
  RecordSink{args.log_path}.write(record);

  if (args.certified && !estimate.gap_reached) return kExitResource;
  return kExitOk;
}

struct ConstructArgs {
  std::int64_t n = 0;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string objective = "logM";
  std::string log_path;
  std::size_t grid_size = 0;
  int threads = 0;
};

int run_construct(const ConstructArgs& args) {
  if (args.n < 2) throw InputError("construct requires --n >= 2");
  if (args.objective != "logM") {
    throw InputError("unknown objective: " + args.objective + " (supported: logM)");
  }

  SupNormOptions opts;
  opts.grid.size = args.grid_size;
  opts.threads = args.threads;

  const std::string started = rfc3339_utc_now();
  const SearchResult result = best_of(args.n, args.trials, args.seed, opts);

  for (const TrialSummary& trial : result.per_trial) {
    ExperimentRecord record;
    record.command = "construct-trial";
    record.params = {{"n", args.n},
                     {"trials", args.trials},
                     {"seed0", args.seed},
                     {"objective", args.objective},
                     {"trial_seed", trial.seed}};
    record.seed = trial.seed;
    record.started_at = started;
    record.finished_at = rfc3339_utc_now();
    record.outputs = {{"sample_size", trial.sample_size},
                      {"log_max_found", trial.log_max_found},
                      {"argmax_theta", trial.argmax_theta}};
    RecordSink{args.log_path}.write(record);
    std::cout << "trial seed=" << trial.seed << " size=" << trial.sample_size
              << " log M = " << fmt12(trial.log_max_found) << '\n';
  }

  if (!args.out_path.empty()) save_set_file(args.out_path, result.best.chosen);

  ExperimentRecord record;
  record.command = "construct";
  record.params = {{"n", args.n},
                   {"trials", args.trials},
                   {"seed0", args.seed},
                   {"objective", args.objective},
                   {"out", args.out_path}};
  record.seed = args.seed;
  record.started_at = started;
  record.finished_at = rfc3339_utc_now();
  record.outputs = {{"best_seed", result.best.seed},
                    {"best_size", result.best.chosen.size()},
                    {"best_log_M", result.best_log_M}};
  RecordSink{args.log_path}.write(record);

  std::cout << "best seed=" << result.best.seed << " size=" << result.best.chosen.size()
            << " log M = " << fmt12(result.best_log_M) << '\n';
  return kExitOk;
}

struct CertifyLowerArgs {
  std::string set_file;
  std::int64_t n = 0;
  double multiplier = 8.0;
  std::optional<double> theta0;
  bool scan = false;
  bool as_json = false;
  std::string log_path;
};

int run_certify_lower(const CertifyLowerArgs& args) {
  const FrequencySet set = load_set_file(args.set_file);
  std::optional<Angle> theta0;
  if (args.theta0.has_value()) theta0 = Angle(*args.theta0);

  ExperimentRecord record;
  record.command = "certify-lower";
  record.params = {{"set_file", args.set_file},
                   {"n", args.n},
                   {"R", args.multiplier},
                   {"scan", args.scan}};
  if (args.theta0.has_value()) record.params["theta0"] = *args.theta0;
  record.started_at = rfc3339_utc_now();

  const DenseLowerCert cert = dense_lower_cert(set, args.n, args.multiplier, theta0, args.scan);

  json outputs = {{"value", cert.value},
                  {"theta0", cert.theta0.value},
                  {"k_max_used", cert.k_max_used},
                  {"term_first", cert.term_first},
                  {"term_second", cert.term_second},
                  {"term_third", cert.term_third}};
  if (args.as_json) {
    std::cout << outputs.dump() << '\n';
  } else {
    std::cout << "certified lower bound on log M(S): " << fmt12(cert.value) << '\n';
    std::cout << "theta0 = " << fmt12(cert.theta0.value) << ", k_max = " << cert.k_max_used << '\n';
    std::cout << "terms: k=1 " << fmt12(cert.term_first) << ", damping " << fmt12(cert.term_second)
              << ", k>=2 " << fmt12(cert.term_third) << '\n';
  }

  record.outputs = outputs;
  record.finished_at = rfc3339_utc_now();
  RecordSink{args.log_path}.write(record);
  return kExitOk;
}

struct DissociateArgs {
  std::string set_file;
  std::string order = "both";
  bool witness = false;
  bool as_json = false;
};

int run_dissociate(const DissociateArgs& args) {
  const FrequencySet set = load_set_file(args.set_file);
  const DissociationWitness verdict = is_dissociated(set);

  json outputs;
  outputs["verdict"] = verdict.is_relation() ? "relation" : "dissociated";
  std::string relation_str;
  if (verdict.is_relation()) {
    relation_str = witness_equation(set, verdict.epsilons);
    if (args.witness) outputs["witness"] = relation_str;
  }

  auto greedy_size = [&](ScanOrder order) {
    return max_dissociated_greedy(set, order).size();
  };
  if (args.order == "ascending" || args.order == "both") {
    outputs["greedy_ascending"] = greedy_size(ScanOrder::ascending);
  }
  if (args.order == "descending" || args.order == "both") {
    outputs["greedy_descending"] = greedy_size(ScanOrder::descending);
  }
  if (args.order != "ascending" && args.order != "descending" && args.order != "both") {
    throw InputError("unknown order: " + args.order);
  }

  if (args.as_json) {
    std::cout << outputs.dump() << '\n';
  } else {
    if (verdict.is_relation()) {
      std::cout << "relation";
      if (args.witness) std::cout << ' ' << relation_str;
      std::cout << '\n';
    } else {
      std::cout << "dissociated\n";
    }
    if (outputs.contains("greedy_ascending")) {
      std::cout << "greedy dissociated size (ascending) = "
                << outputs["greedy_ascending"].get<std::size_t>() << '\n';
    }
    if (outputs.contains("greedy_descending")) {
      std::cout << "greedy dissociated size (descending) = "
                << outputs["greedy_descending"].get<std::size_t>() << '\n';
    }
  }
  return kExitOk;
}

struct ScanIntervalArgs {
  std::int64_t n_from = 1;
  std::int64_t n_to = 1;
  bool as_json = false;
  std::string out_path;
  std::string log_path;
  int threads = 0;
};

int run_scan_interval(const ScanIntervalArgs& args) {
  if (args.n_from < 1 || args.n_from > args.n_to) {
    throw InputError("scan-interval requires 1 <= n-from <= n-to");
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!args.out_path.empty()) {
    file.open(args.out_path);
    if (!file) throw Error("cannot write output file: " + args.out_path);
    out = &file;
  }

  ExperimentRecord record;
  record.command = "scan-interval";
  record.params = {{"n_from", args.n_from}, {"n_to", args.n_to}};
  record.started_at = rfc3339_utc_now();

  if (!args.as_json) *out << "n,log_M,M,M_pow_1_over_n,argmax_theta\n";
  for (std::int64_t n = args.n_from; n <= args.n_to; ++n) {
    SupNormOptions opts;
    opts.threads = args.threads;
    const SupNormEstimate estimate = sup_norm(interval_set(n), opts);
    const double root = std::exp(estimate.log_max_found / static_cast<double>(n));
    if (args.as_json) {
      const json row = {{"n", n},
                        {"log_M", estimate.log_max_found},
                        {"M", std::exp(estimate.log_max_found)},
                        {"M_pow_1_over_n", root},
                        {"argmax_theta", estimate.argmax_theta.value}};
      *out << row.dump() << '\n';
    } else {
      *out << n << ',' << fmt12(estimate.log_max_found) << ','
           << fmt12(std::exp(estimate.log_max_found)) << ',' << fmt12(root) << ','
           << fmt12(estimate.argmax_theta.value) << '\n';
    }
  }

  record.outputs = {{"rows", args.n_to - args.n_from + 1}};
  record.finished_at = rfc3339_utc_now();
  RecordSink{args.log_path}.write(record);
  return kExitOk;
}

struct SpectraArgs {
  std::string set_file;
  std::int64_t t = 0;
  std::int64_t r = 0;
  bool as_json = false;
};

int run_spectra(const SpectraArgs& args) {
  const FrequencySet set = load_set_file(args.set_file);
  const MobiusInvertedCoeff coeff = mobius_inverted_coeff(set, args.t, args.r);

  auto describe = [](const Rational& v) {
    return to_fraction_string(v) + " (" + fmt12(v.convert_to<double>()) + ")";
  };
  if (args.as_json) {
    const json outputs = {{"t", coeff.t},
                          {"r", coeff.r},
                          {"H_hat", to_fraction_string(coeff.H_hat)},
                          {"f_hat", to_fraction_string(coeff.f_hat)},
                          {"G_hat", to_fraction_string(coeff.G_hat)},
                          {"G_hat_bound", to_fraction_string(coeff.G_hat_bound)},
                          {"H_hat_decimal", coeff.H_hat.convert_to<double>()},
                          {"G_hat_decimal", coeff.G_hat.convert_to<double>()}};
    std::cout << outputs.dump() << '\n';
  } else {
    std::cout << "H_hat = " << describe(coeff.H_hat) << '\n';
    std::cout << "f_hat = " << describe(coeff.f_hat) << '\n';
    std::cout << "G_hat = " << describe(coeff.G_hat) << '\n';
    std::cout << "|G_hat| bound = " << describe(coeff.G_hat_bound) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tools for the extremal products prod_j |1 - z^{a_j}| on the unit circle"};
  app.set_version_flag("--version", std::string("trigprod ") + kToolVersion);
  app.require_subcommand(0, 1);

  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = all cores)");

  EvalArgs eval_args;
  CLI::App* eval_cmd = app.add_subcommand("eval", "estimate M(S) for a set file");
  eval_cmd->add_option("set_file", eval_args.set_file, "frequency set file")->required();
  eval_cmd->add_option("--grid-size", eval_args.grid_size, "scan grid size (0 = default rule)");
  eval_cmd->add_option("--refine-iters", eval_args.refine_iters, "refinement iteration cap");
  eval_cmd->add_flag("--certified", eval_args.certified, "certified bracket from exact coefficients");
  eval_cmd->add_option("--gap", eval_args.gap, "target log-space bracket width");
  eval_cmd->add_flag("--json", eval_args.as_json, "print a JSON object");
  eval_cmd->add_option("--log", eval_args.log_path, "append an ExperimentRecord JSONL line");

  ConstructArgs construct_args;
  CLI::App* construct_cmd =
      app.add_subcommand("construct", "best-of-K random Fejer-selector subsets of {1..n-1}");
  construct_cmd->add_option("--n", construct_args.n, "ambient interval size")->required();
  construct_cmd->add_option("--trials", construct_args.trials, "number of seeds to try");
  construct_cmd->add_option("--seed", construct_args.seed, "base seed");
  construct_cmd->add_option("--out", construct_args.out_path, "write the best set here");
  construct_cmd->add_option("--objective", construct_args.objective, "search objective (logM)");
  construct_cmd->add_option("--log", construct_args.log_path, "append JSONL records");
  construct_cmd->add_option("--grid-size", construct_args.grid_size, "evaluation grid (0 = default)");

  CertifyLowerArgs certify_args;
  CLI::App* certify_cmd =
      app.add_subcommand("certify-lower", "Fejer-convolution lower bound on log M(S)");
  certify_cmd->add_option("set_file", certify_args.set_file, "frequency set file")->required();
  certify_cmd->add_option("--n", certify_args.n, "ambient interval size")->required();
  certify_cmd->add_option("--R", certify_args.multiplier, "Fejer length multiplier (> 1)");
  double theta0_value = 0.0;
  CLI::Option* theta0_opt =
      certify_cmd->add_option("--theta0", theta0_value, "evaluation point (default 3/(4n))");
  certify_cmd->add_flag("--scan", certify_args.scan, "scan 8n candidate evaluation points");
  certify_cmd->add_flag("--json", certify_args.as_json, "print a JSON object");
  certify_cmd->add_option("--log", certify_args.log_path, "append an ExperimentRecord JSONL line");

  DissociateArgs dissociate_args;
  CLI::App* dissociate_cmd = app.add_subcommand("dissociate", "dissociation test with witness");
  dissociate_cmd->add_option("set_file", dissociate_args.set_file, "frequency set file")->required();
  dissociate_cmd->add_option("--order", dissociate_args.order,
                             "greedy scan order: ascending, descending, both");
  dissociate_cmd->add_flag("--witness", dissociate_args.witness, "print one relation when found");
  dissociate_cmd->add_flag("--json", dissociate_args.as_json, "print a JSON object");

  ScanIntervalArgs scan_args;
  CLI::App* scan_cmd = app.add_subcommand("scan-interval", "M(1..n) table for a range of n");
  scan_cmd->add_option("--n-from", scan_args.n_from, "first n")->required();
  scan_cmd->add_option("--n-to", scan_args.n_to, "last n")->required();
  scan_cmd->add_flag("--json", scan_args.as_json, "JSONL rows instead of CSV");
  scan_cmd->add_option("--out", scan_args.out_path, "write the table here (default stdout)");
  scan_cmd->add_option("--log", scan_args.log_path, "append an ExperimentRecord JSONL line");

  SpectraArgs spectra_args;
  CLI::App* spectra_cmd =
      app.add_subcommand("spectra", "truncated Moebius-inversion coefficients at frequency t");
  spectra_cmd->add_option("set_file", spectra_args.set_file, "frequency set file")->required();
  spectra_cmd->add_option("--t", spectra_args.t, "frequency (>= 1)")->required();
  spectra_cmd->add_option("--r", spectra_args.r, "inversion cutoff (>= 1)")->required();
  spectra_cmd->add_flag("--json", spectra_args.as_json, "print a JSON object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  eval_args.threads = threads;
  construct_args.threads = threads;
  scan_args.threads = threads;
  if (theta0_opt->count() > 0) certify_args.theta0 = theta0_value;

  try {
    if (*eval_cmd) return run_eval(eval_args);
    if (*construct_cmd) return run_construct(construct_args);
    if (*certify_cmd) return run_certify_lower(certify_args);
    if (*dissociate_cmd) return run_dissociate(dissociate_args);
    if (*scan_cmd) return run_scan_interval(scan_args);
    if (*spectra_cmd) return run_spectra(spectra_args);
    std::cout << app.help();
    return kExitOk;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 1;
  }
}
