// Command line front end: simulate projective tomography counts, estimate
// states from count records, run sweep experiments, and compare states.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ocqst/harness.hpp"
#include "ocqst/io.hpp"
#include "ocqst/metrics.hpp"
#include "ocqst/version.hpp"

namespace {

using namespace ocqst;

std::string fmt(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

struct SimulateArgs {
  std::string state = "random";
  int qubits = 1;
  std::string scheme = "overcomplete";
  std::int64_t total_n = 10000;
  std::uint64_t seed = 0;
  std::string out;
  std::string truth_out;
};

int run_simulate(const SimulateArgs& args) {
  const StateSpec spec = parse_state_spec_string(args.state, args.qubits);
  const SchemeSpec scheme = parse_scheme_string(args.scheme);
  const BasisSet basis = scheme.build(spec.n_qubits);

  RngStream rng(args.seed);
  const DensityMatrix truth = make_state(spec, rng);
  const CountRecord record = simulate_counts(truth, basis, args.total_n, rng);

  write_count_record(record, args.out);
  if (!args.truth_out.empty()) write_density(truth, args.truth_out);
  return 0;
}

struct EstimateArgs {
  std::string counts;
  std::string anneal_config;
  std::uint64_t seed = 0;
  std::string out;
  std::string report;
};

int run_estimate(const EstimateArgs& args) {
  const CountRecord record = read_count_record(args.counts);
  const AnnealConfig config = args.anneal_config.empty()
                                  ? AnnealConfig{}
                                  : read_anneal_config(args.anneal_config);

  RngStream rng(args.seed);
  const EstimateReport report = anneal(record, config, rng);

  write_density(report.estimate, args.out);
  const std::string report_path =
      args.report.empty() ? args.out + ".report.json" : args.report;
  write_estimate_report(report, config, args.seed, report_path);
  return 0;
}

struct SweepArgs {
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out;
  int trials = 0;
  int workers = -1;
};

int run_sweep_cmd(const SweepArgs& args) {
  SweepConfig config = read_sweep_config(args.config_path);
  if (args.seed_set) config.master_seed = args.seed;
  if (!args.out.empty()) config.output_path = args.out;
  if (args.trials > 0) config.trials = args.trials;
  if (args.workers >= 0) config.workers = args.workers;
  if (config.output_path.empty()) {
    throw config_error("no output path: set output_path in the config or pass --out");
  }

  const auto rows = run_sweep(config);
  write_csv(rows, config.output_path, config);
  std::cerr << "wrote " << rows.size() << " rows to " << config.output_path
            << "\n";
  return 0;
}

int run_metrics(const std::string& path_a, const std::string& path_b) {
  const DensityMatrix a = read_density(path_a);
  const DensityMatrix b = read_density(path_b);
  std::cout << metric_hs_distance << " " << fmt(hs_distance(a, b)) << "\n";
  if (a.n_qubits() == 2 && b.n_qubits() == 2) {
    std::cout << metric_concurrence_unclamped << " a="
              << fmt(concurrence_unclamped(a)) << " b="
              << fmt(concurrence_unclamped(b)) << "\n";
    std::cout << metric_concurrence << " a=" << fmt(concurrence(a))
              << " b=" << fmt(concurrence(b)) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"over-complete quantum state tomography simulator"};
  app.set_version_flag("--version", ocqst::version);
  app.require_subcommand(1);

  SimulateArgs simulate_args;
  auto* simulate = app.add_subcommand(
      "simulate", "simulate tomography counts for a chosen state");
  simulate->add_option("--state", simulate_args.state,
                       "random, random:pure, werner:<q>, bell_diagonal:<b>, "
                       "or pure:<label>");
  simulate->add_option("--qubits", simulate_args.qubits,
                       "qubit count for random states")
      ->check(CLI::Range(1, 2));
  simulate->add_option("--scheme", simulate_args.scheme,
                       "standard, standard:<letters>, overcomplete, or "
                       "table1:<m>");
  simulate->add_option("--N", simulate_args.total_n, "total copies to divide")
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--seed", simulate_args.seed, "rng seed");
  simulate->add_option("--out", simulate_args.out, "count record output path")
      ->required();
  simulate->add_option("--truth-out", simulate_args.truth_out,
                       "also write the true state");

  EstimateArgs estimate_args;
  auto* estimate = app.add_subcommand(
      "estimate", "reconstruct a state from a count record");
  estimate->add_option("--counts", estimate_args.counts, "count record file")
      ->required();
  estimate->add_option("--anneal-config", estimate_args.anneal_config,
                       "anneal parameter overrides (json)");
  estimate->add_option("--seed", estimate_args.seed, "rng seed");
  estimate->add_option("--out", estimate_args.out, "density matrix output path")
      ->required();
  estimate->add_option("--report", estimate_args.report,
                       "report path (default <out>.report.json)");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "run a sweep experiment to CSV");
  sweep->add_option("--config", sweep_args.config_path, "sweep config file")
      ->required();
  auto* seed_opt = sweep->add_option("--seed", sweep_args.seed,
                                     "override the config master_seed");
  sweep->add_option("--out", sweep_args.out, "override the config output_path");
  sweep->add_option("--trials", sweep_args.trials, "override trials");
  sweep->add_option("--workers", sweep_args.workers, "worker thread count");

  std::string metrics_a, metrics_b;
  auto* metrics = app.add_subcommand(
      "metrics", "print distance and concurrence of two states");
  metrics->add_option("a", metrics_a, "first density matrix file")->required();
  metrics->add_option("b", metrics_b, "second density matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    sweep_args.seed_set = seed_opt->count() > 0;
    if (simulate->parsed()) return run_simulate(simulate_args);
    if (estimate->parsed()) return run_estimate(estimate_args);
    if (sweep->parsed()) return run_sweep_cmd(sweep_args);
    if (metrics->parsed()) return run_metrics(metrics_a, metrics_b);
  } catch (const ocqst::io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const ocqst::consistency_error& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return 3;
  } catch (const ocqst::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
