#pragma once

#include <string>

#include "ocqst/harness.hpp"
#include "ocqst/matrix.hpp"
#include "ocqst/measure.hpp"
#include "ocqst/mle.hpp"

namespace ocqst {

// All file formats are JSON.  Floating point values are written with 17
// significant digits so that reads reproduce writes bit-exactly.

// {"n_qubits": n, "entries": [[re, im], ...]} with dim^2 row-major pairs.
// Readers validate with tolerance 1e-9.
void write_density(const DensityMatrix& rho, const std::string& path);
DensityMatrix read_density(const std::string& path);

// Count record with its embedded basis set description:
// {"basis_set": {"scheme", "n_qubits", "m", "labels"},
//  "shots": [...], "counts": [...], "total_N": n}
void write_count_record(const CountRecord& record, const std::string& path);
CountRecord read_count_record(const std::string& path);

void write_anneal_config(const AnnealConfig& config, const std::string& path);
AnnealConfig read_anneal_config(const std::string& path);

// Report fields plus the resolved anneal configuration and seed used.
void write_estimate_report(const EstimateReport& report,
                           const AnnealConfig& config, std::uint64_t seed,
                           const std::string& path);

// Sweep configuration file, key names mirroring SweepConfig.
SweepConfig read_sweep_config(const std::string& path);
std::string sweep_config_to_json(const SweepConfig& config);

// Helpers shared by the CLI.
StateSpec parse_state_spec_string(const std::string& text, int n_qubits);
SchemeSpec parse_scheme_string(const std::string& text);

}  // namespace ocqst
