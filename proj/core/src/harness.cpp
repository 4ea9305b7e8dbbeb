#include "ocqst/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "ocqst/io.hpp"
#include "ocqst/metrics.hpp"
#include "ocqst/version.hpp"

namespace ocqst {

std::string experiment_name(Experiment e) {
  switch (e) {
    case Experiment::error_sweep: return "error_sweep";
    case Experiment::concurrence_sweep: return "concurrence_sweep";
    case Experiment::basis_count_sweep: return "basis_count_sweep";
  }
  return "?";
}

BasisSet SchemeSpec::build(int n_qubits) const {
  switch (scheme) {
    case BasisScheme::standard: return standard_set(n_qubits, standard_letters);
    case BasisScheme::overcomplete: return overcomplete_set(n_qubits);
    case BasisScheme::table1_prefix:
      if (n_qubits != 2) {
        throw config_error("table1 schemes need a two-qubit state");
      }
      return table1_prefix(table1_m);
  }
  throw config_error("unknown basis scheme");
}

std::string SchemeSpec::tag() const {
  switch (scheme) {
    case BasisScheme::standard: return "standard";
    case BasisScheme::overcomplete: return "overcomplete";
    case BasisScheme::table1_prefix: return "table1:" + std::to_string(table1_m);
  }
  return "?";
}

void SweepConfig::validate() const {
  auto fail = [](const std::string& what) { throw config_error(what); };

  if (n_grid.empty()) fail("n_grid must not be empty");
  for (size_t i = 0; i + 1 < n_grid.size(); ++i) {
    if (n_grid[i] >= n_grid[i + 1]) fail("n_grid must be strictly increasing");
  }
  for (auto n : n_grid) {
    if (n < 0) fail("n_grid entries must be non-negative");
  }
  if (trials < 1) fail("trials must be >= 1");
  for (int m : m_grid) {
    if (m < 4 || m > 36) fail("m_grid entries must lie in [4, 36]");
  }

  if (state.n_qubits < 1 || state.n_qubits > 2) {
    fail("state.n_qubits must be 1 or 2");
  }
  if (state.kind == StateKind::bell_diagonal || state.kind == StateKind::werner) {
    if (state.n_qubits != 2) fail("bell_diagonal/werner states are two-qubit");
    if (!(state.parameter >= 0.0 && state.parameter <= 1.0)) {
      fail("state.parameter must lie in [0, 1]");
    }
  }

  switch (experiment) {
    case Experiment::error_sweep:
    case Experiment::concurrence_sweep:
      if (schemes.empty()) fail("schemes must not be empty");
      break;
    case Experiment::basis_count_sweep:
      if (m_grid.empty()) fail("basis_count_sweep needs a non-empty m_grid");
      if (state.n_qubits != 2) fail("basis_count_sweep needs a two-qubit state");
      break;
  }
  if (experiment == Experiment::concurrence_sweep &&
      state.kind != StateKind::bell_diagonal && state.kind != StateKind::werner) {
    fail("concurrence_sweep needs a bell_diagonal or werner state");
  }
  if (workers < 0) fail("workers must be >= 0");

  anneal.validate();
}

MeanStdErr mean_stderr(const std::vector<double>& values) {
  MeanStdErr out;
  out.count = static_cast<int>(values.size());
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / out.count;
  if (out.count < 2) return out;
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  out.stderr_mean = std::sqrt(ss / (out.count - 1)) / std::sqrt(out.count);
  return out;
}

namespace {

struct Group {
  std::int64_t n = 0;
  SchemeSpec scheme;
  BasisSet basis;
  std::string seed_tag;
};

int resolve_workers(int configured) {
  if (configured > 0) return configured;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(0..n_jobs-1) across a small thread pool.  Job outputs are
// written to per-index slots by the callers, so the result is independent
// of scheduling order.
template <typename Fn>
void run_jobs(int n_jobs, int workers, Fn&& fn) {
  workers = std::min(workers, n_jobs);
  if (workers <= 1) {
    for (int i = 0; i < n_jobs; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (int i = next.fetch_add(1); i < n_jobs; i = next.fetch_add(1)) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

struct TrialResult {
  std::uint64_t seed = 0;
  double value = 0.0;
};

// Shared trial pipeline: draw/fix the truth, simulate counts, estimate,
// score with the given metric.
std::vector<std::vector<TrialResult>> run_groups(
    const SweepConfig& config, const std::vector<Group>& groups,
    double (*score)(const DensityMatrix& truth, const DensityMatrix& estimate)) {
  const std::string exp = experiment_name(config.experiment);
  const int trials = config.trials;

  std::vector<std::vector<TrialResult>> results(groups.size());
  for (auto& g : results) g.resize(trials);

  const int n_jobs = static_cast<int>(groups.size()) * trials;
  run_jobs(n_jobs, resolve_workers(config.workers), [&](int job) {
    const int group_index = job / trials;
    const int trial = job % trials;
    const Group& group = groups[group_index];

    RngStream state_rng =
        derive_stream(config.master_seed, exp + "/state", trial);
    const DensityMatrix truth = make_state(config.state, state_rng);

    const std::uint64_t seed =
        derive_seed(config.master_seed, group.seed_tag, trial);
    RngStream rng(seed);
    const CountRecord record =
        simulate_counts(truth, group.basis, group.n, rng);
    const EstimateReport report = anneal(record, config.anneal, rng);

    results[group_index][trial] = {seed, score(truth, report.estimate)};
  });
  return results;
}

void append_aggregate(std::vector<SweepRow>& rows, const SweepRow& prototype,
                      std::string_view metric, double value,
                      std::optional<double> truth) {
  SweepRow row = prototype;
  row.trial = -1;
  row.seed_used = 0;
  row.metric_name = std::string(metric);
  row.metric_value = value;
  row.truth_value = truth;
  rows.push_back(std::move(row));
}

}  // namespace

std::vector<SweepRow> run_error_sweep(const SweepConfig& config) {
  if (config.experiment != Experiment::error_sweep) {
    throw config_error("run_error_sweep: config.experiment mismatch");
  }
  config.validate();
  const std::string exp = experiment_name(config.experiment);

  std::vector<Group> groups;
  for (auto n : config.n_grid) {
    for (const auto& scheme : config.schemes) {
      Group g;
      g.n = n;
      g.scheme = scheme;
      g.basis = scheme.build(config.state.n_qubits);
      g.seed_tag = exp + "/N=" + std::to_string(n) + "/scheme=" + scheme.tag();
      groups.push_back(std::move(g));
    }
  }

  auto results = run_groups(config, groups,
                            [](const DensityMatrix& truth,
                               const DensityMatrix& estimate) {
                              return hs_distance(truth, estimate);
                            });

  std::vector<SweepRow> rows;
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    const Group& group = groups[gi];
    SweepRow proto;
    proto.experiment = exp;
    proto.scheme = group.scheme.tag();
    proto.n = group.n;
    proto.m = group.basis.size();
    proto.metric_name = std::string(metric_hs_distance);

    std::vector<double> values;
    values.reserve(results[gi].size());
    for (int trial = 0; trial < config.trials; ++trial) {
      SweepRow row = proto;
      row.trial = trial;
      row.seed_used = results[gi][trial].seed;
      row.metric_value = results[gi][trial].value;
      rows.push_back(std::move(row));
      values.push_back(results[gi][trial].value);
    }
    const MeanStdErr agg = mean_stderr(values);
    append_aggregate(rows, proto, "hs_distance_mean", agg.mean, std::nullopt);
    append_aggregate(rows, proto, "hs_distance_stderr", agg.stderr_mean,
                     std::nullopt);
  }
  return rows;
}

std::vector<SweepRow> run_concurrence_sweep(const SweepConfig& config) {
  if (config.experiment != Experiment::concurrence_sweep) {
    throw config_error("run_concurrence_sweep: config.experiment mismatch");
  }
  config.validate();
  const std::string exp = experiment_name(config.experiment);

  std::vector<Group> groups;
  for (auto n : config.n_grid) {
    for (const auto& scheme : config.schemes) {
      Group g;
      g.n = n;
      g.scheme = scheme;
      g.basis = scheme.build(config.state.n_qubits);
      g.seed_tag = exp + "/N=" + std::to_string(n) + "/scheme=" + scheme.tag();
      groups.push_back(std::move(g));
    }
  }

  auto results = run_groups(config, groups,
                            [](const DensityMatrix& truth,
                               const DensityMatrix& estimate) {
                              (void)truth;
                              return concurrence_unclamped(estimate);
                            });

  RngStream unused(0);
  const double truth_value =
      concurrence_unclamped(make_state(config.state, unused));

  std::vector<SweepRow> rows;
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    const Group& group = groups[gi];
    SweepRow proto;
    proto.experiment = exp;
    proto.scheme = group.scheme.tag();
    proto.n = group.n;
    proto.m = group.basis.size();
    proto.metric_name = std::string(metric_concurrence_unclamped);
    proto.truth_value = truth_value;

    std::vector<double> values;
    values.reserve(results[gi].size());
    for (int trial = 0; trial < config.trials; ++trial) {
      SweepRow row = proto;
      row.trial = trial;
      row.seed_used = results[gi][trial].seed;
      row.metric_value = results[gi][trial].value;
      rows.push_back(std::move(row));
      values.push_back(results[gi][trial].value);
    }
    const MeanStdErr agg = mean_stderr(values);
    double rmse = 0.0;
    for (double v : values) rmse += (v - truth_value) * (v - truth_value);
    rmse = std::sqrt(rmse / values.size());

    append_aggregate(rows, proto, "concurrence_unclamped_mean", agg.mean,
                     truth_value);
    append_aggregate(rows, proto, "concurrence_unclamped_stderr",
                     agg.stderr_mean, truth_value);
    append_aggregate(rows, proto, "concurrence_unclamped_bias",
                     agg.mean - truth_value, truth_value);
    append_aggregate(rows, proto, "concurrence_unclamped_rmse", rmse,
                     truth_value);
  }
  return rows;
}

std::vector<SweepRow> run_basis_count_sweep(const SweepConfig& config) {
  if (config.experiment != Experiment::basis_count_sweep) {
    throw config_error("run_basis_count_sweep: config.experiment mismatch");
  }
  config.validate();
  const std::string exp = experiment_name(config.experiment);

  std::vector<Group> groups;
  for (auto n : config.n_grid) {
    for (int m : config.m_grid) {
      Group g;
      g.n = n;
      g.scheme.scheme = BasisScheme::table1_prefix;
      g.scheme.table1_m = m;
      g.basis = table1_prefix(m);
      g.seed_tag =
          exp + "/N=" + std::to_string(n) + "/scheme=" + g.scheme.tag();
      groups.push_back(std::move(g));
    }
  }

  auto results = run_groups(config, groups,
                            [](const DensityMatrix& truth,
                               const DensityMatrix& estimate) {
                              return hs_distance(truth, estimate);
                            });

  std::vector<SweepRow> rows;
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    const Group& group = groups[gi];
    SweepRow proto;
    proto.experiment = exp;
    proto.scheme = group.scheme.tag();
    proto.n = group.n;
    proto.m = group.basis.size();
    proto.metric_name = std::string(metric_hs_distance);

    std::vector<double> values;
    values.reserve(results[gi].size());
    for (int trial = 0; trial < config.trials; ++trial) {
      SweepRow row = proto;
      row.trial = trial;
      row.seed_used = results[gi][trial].seed;
      row.metric_value = results[gi][trial].value;
      rows.push_back(std::move(row));
      values.push_back(results[gi][trial].value);
    }
    const MeanStdErr agg = mean_stderr(values);
    append_aggregate(rows, proto, "hs_distance_mean", agg.mean, std::nullopt);
    append_aggregate(rows, proto, "hs_distance_stderr", agg.stderr_mean,
                     std::nullopt);
  }
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  switch (config.experiment) {
    case Experiment::error_sweep: return run_error_sweep(config);
    case Experiment::concurrence_sweep: return run_concurrence_sweep(config);
    case Experiment::basis_count_sweep: return run_basis_count_sweep(config);
  }
  throw config_error("run_sweep: unknown experiment");
}

namespace {

std::string format_sig12(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

}  // namespace

void write_csv(const std::vector<SweepRow>& rows, const std::string& path,
               const SweepConfig& config) {
  std::ofstream out(path);
  if (!out) throw io_error(path + ": cannot open for writing");

  out << "experiment,scheme,N,m,trial,seed_used,metric_name,metric_value,"
         "truth_value\n";
  for (const auto& row : rows) {
    out << row.experiment << ',' << row.scheme << ',' << row.n << ',' << row.m
        << ',' << row.trial << ',' << row.seed_used << ',' << row.metric_name
        << ',' << format_sig12(row.metric_value) << ',';
    if (row.truth_value) out << format_sig12(*row.truth_value);
    out << '\n';
  }
  if (!out) throw io_error(path + ": write failed");
  out.close();

  const std::string meta_path = path + ".meta.json";
  std::ofstream meta(meta_path);
  if (!meta) throw io_error(meta_path + ": cannot open for writing");
  meta << "{\n"
       << "  \"library_version\": \"" << version << "\",\n"
       << "  \"rng\": \"xoshiro256** seeded via splitmix64; tags hashed with "
          "fnv1a64\",\n"
       << "  \"random_state_measure\": \"hilbert-schmidt (ginibre)\",\n"
       << "  \"config\": " << sweep_config_to_json(config) << "\n"
       << "}\n";
  if (!meta) throw io_error(meta_path + ": write failed");
}

}  // namespace ocqst
