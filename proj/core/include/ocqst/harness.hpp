#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocqst/measure.hpp"
#include "ocqst/mle.hpp"
#include "ocqst/states.hpp"

namespace ocqst {

enum class Experiment { error_sweep, concurrence_sweep, basis_count_sweep };

std::string experiment_name(Experiment e);

// One basis scheme to sweep over.  table1_m is only meaningful for
// table1_prefix.
struct SchemeSpec {
  BasisScheme scheme = BasisScheme::standard;
  int table1_m = 36;
  std::string standard_letters = "01+L";

  BasisSet build(int n_qubits) const;
  // "standard", "overcomplete", or "table1:<m>"; used in CSV rows and
  // seed-derivation tags.
  std::string tag() const;
};

struct SweepConfig {
  Experiment experiment = Experiment::error_sweep;
  StateSpec state;
  std::vector<SchemeSpec> schemes;
  std::vector<std::int64_t> n_grid;
  std::vector<int> m_grid;          // basis_count_sweep only
  int trials = 1;
  std::uint64_t master_seed = 0;
  AnnealConfig anneal;
  std::string output_path;
  int workers = 0;                  // 0 = hardware concurrency

  // Throws config_error on the first violated constraint.
  void validate() const;
};

// One CSV line.  trial == -1 marks a per-(N, scheme) aggregate row, whose
// metric_name carries a _mean/_stderr/_bias/_rmse suffix.
struct SweepRow {
  std::string experiment;
  std::string scheme;
  std::int64_t n = 0;
  int m = 0;
  int trial = 0;
  std::uint64_t seed_used = 0;
  std::string metric_name;
  double metric_value = 0.0;
  std::optional<double> truth_value;
};

// Per-trial HS distance between the true and the reconstructed state, for
// every (N, scheme) pair, plus mean and standard-error aggregate rows.
std::vector<SweepRow> run_error_sweep(const SweepConfig& config);

// Same pipeline on a fixed bell_diagonal/werner state, recording the
// unclamped concurrence of each estimate; aggregates add bias and RMSE.
std::vector<SweepRow> run_concurrence_sweep(const SweepConfig& config);

// HS error of table-prefix estimation at fixed N for each m in m_grid.
std::vector<SweepRow> run_basis_count_sweep(const SweepConfig& config);

// Dispatches on config.experiment.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

// Writes the header plus one line per row (12 significant digits), and a
// <path>.meta.json sidecar carrying the full config, seed, and library
// version.
void write_csv(const std::vector<SweepRow>& rows, const std::string& path,
               const SweepConfig& config);

// Mean and standard error of the mean (0 when n < 2).
struct MeanStdErr {
  double mean = 0.0;
  double stderr_mean = 0.0;
  int count = 0;
};
MeanStdErr mean_stderr(const std::vector<double>& values);

}  // namespace ocqst
