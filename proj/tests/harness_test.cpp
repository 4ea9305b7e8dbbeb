#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ocqst/harness.hpp"
#include "ocqst/io.hpp"

using namespace ocqst;

namespace {

AnnealConfig quick_anneal() {
  AnnealConfig config;
  config.sweeps_per_temperature = 5;
  config.max_temperature_steps = 40;
  config.stall_window = 5;
  return config;
}

SweepConfig quick_error_config() {
  SweepConfig config;
  config.experiment = Experiment::error_sweep;
  config.state.kind = StateKind::random;
  config.state.n_qubits = 1;
  config.schemes = {parse_scheme_string("standard"),
                    parse_scheme_string("overcomplete")};
  config.n_grid = {100, 1000};
  config.trials = 4;
  config.master_seed = 42;
  config.anneal = quick_anneal();
  config.workers = 2;
  return config;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

std::string temp_path(const char* name) {
  return std::string("harness_test_") + name;
}

}  // namespace

TEST_SUITE_BEGIN("harness");

TEST_CASE("seed derivation is deterministic and input-sensitive") {
  CHECK(derive_seed(1, "a", 0) == derive_seed(1, "a", 0));
  CHECK(derive_seed(1, "a", 0) != derive_seed(1, "a", 1));
  CHECK(derive_seed(1, "a", 0) != derive_seed(1, "b", 0));
  CHECK(derive_seed(1, "a", 0) != derive_seed(2, "a", 0));

  RngStream a = derive_stream(9, "tag", 4);
  RngStream b = derive_stream(9, "tag", 4);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("streams of neighboring trials are uncorrelated") {
  RngStream a = derive_stream(42, "error_sweep", 0);
  RngStream b = derive_stream(42, "error_sweep", 1);
  const int n = 10000;
  double sum_a = 0.0, sum_b = 0.0, sum_ab = 0.0, sum_a2 = 0.0, sum_b2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = a.uniform();
    const double y = b.uniform();
    sum_a += x;
    sum_b += y;
    sum_ab += x * y;
    sum_a2 += x * x;
    sum_b2 += y * y;
  }
  const double cov = sum_ab / n - (sum_a / n) * (sum_b / n);
  const double var_a = sum_a2 / n - (sum_a / n) * (sum_a / n);
  const double var_b = sum_b2 / n - (sum_b / n) * (sum_b / n);
  const double corr = cov / std::sqrt(var_a * var_b);
  CHECK(std::abs(corr) < 0.05);
}

TEST_CASE("error sweep emits trial rows plus aggregates per group") {
  SweepConfig config = quick_error_config();
  config.n_grid = {100};
  config.trials = 1;
  const auto rows = run_error_sweep(config);
  // per (N, scheme): 1 trial row + mean + stderr
  REQUIRE(rows.size() == 2 * 3);
  CHECK(rows[0].metric_name == "hs_distance");
  CHECK(rows[0].trial == 0);
  CHECK(rows[0].scheme == "standard");
  CHECK(rows[0].m == 4);
  CHECK(rows[1].metric_name == "hs_distance_mean");
  CHECK(rows[2].metric_name == "hs_distance_stderr");
  CHECK(rows[3].scheme == "overcomplete");
  CHECK(rows[3].m == 6);
  for (const auto& row : rows) {
    if (row.trial >= 0) CHECK(row.metric_value >= 0.0);
  }
}

TEST_CASE("doubling trials preserves the earlier trial rows") {
  SweepConfig small = quick_error_config();
  small.n_grid = {100};
  SweepConfig big = small;
  big.trials = 8;

  const auto rows_small = run_error_sweep(small);
  const auto rows_big = run_error_sweep(big);

  for (const auto& row : rows_small) {
    if (row.trial < 0) continue;
    bool found = false;
    for (const auto& other : rows_big) {
      if (other.trial == row.trial && other.scheme == row.scheme &&
          other.n == row.n && other.metric_name == row.metric_name) {
        CHECK(other.metric_value == row.metric_value);
        CHECK(other.seed_used == row.seed_used);
        found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("sweeps are byte-deterministic across runs and worker counts") {
  SweepConfig config = quick_error_config();
  const std::string path_a = temp_path("det_a.csv");
  const std::string path_b = temp_path("det_b.csv");

  write_csv(run_error_sweep(config), path_a, config);
  config.workers = 1;
  write_csv(run_error_sweep(config), path_b, config);

  const std::string text_a = slurp(path_a);
  std::string text_b = slurp(path_b);
  CHECK(text_a == text_b);

  std::remove(path_a.c_str());
  std::remove(path_b.c_str());
  std::remove((path_a + ".meta.json").c_str());
  std::remove((path_b + ".meta.json").c_str());
}

TEST_CASE("error sweep draws a fresh random state per trial") {
  SweepConfig config = quick_error_config();
  config.n_grid = {1000};
  config.schemes = {parse_scheme_string("overcomplete")};
  config.trials = 6;
  const auto rows = run_error_sweep(config);
  // distinct truths and counts make identical per-trial errors implausible
  std::vector<double> values;
  for (const auto& row : rows) {
    if (row.trial >= 0) values.push_back(row.metric_value);
  }
  REQUIRE(values.size() == 6);
  for (size_t i = 1; i < values.size(); ++i) CHECK(values[i] != values[0]);
}

TEST_CASE("concurrence sweep carries the truth in every row") {
  SweepConfig config;
  config.experiment = Experiment::concurrence_sweep;
  config.state.kind = StateKind::bell_diagonal;
  config.state.parameter = 0.8;
  config.state.n_qubits = 2;
  config.schemes = {parse_scheme_string("standard"),
                    parse_scheme_string("overcomplete")};
  config.n_grid = {500};
  config.trials = 3;
  config.master_seed = 7;
  config.anneal = quick_anneal();
  config.workers = 2;

  const auto rows = run_concurrence_sweep(config);
  REQUIRE(!rows.empty());
  for (const auto& row : rows) {
    REQUIRE(row.truth_value.has_value());
    CHECK(*row.truth_value == doctest::Approx(0.6).epsilon(1e-9));
  }
  int bias_rows = 0;
  for (const auto& row : rows) {
    if (row.metric_name == "concurrence_unclamped_bias") ++bias_rows;
    if (row.trial >= 0) CHECK(row.metric_name == "concurrence_unclamped");
  }
  CHECK(bias_rows == 2);
}

TEST_CASE("concurrence sweep rejects non-family states") {
  SweepConfig config;
  config.experiment = Experiment::concurrence_sweep;
  config.state.kind = StateKind::random;
  config.state.n_qubits = 2;
  config.schemes = {parse_scheme_string("overcomplete")};
  config.n_grid = {100};
  CHECK_THROWS_AS(run_concurrence_sweep(config), config_error);
}

TEST_CASE("basis count sweep runs table prefixes") {
  SweepConfig config;
  config.experiment = Experiment::basis_count_sweep;
  config.state.kind = StateKind::werner;
  config.state.parameter = 0.5;
  config.state.n_qubits = 2;
  config.n_grid = {2000};
  config.m_grid = {4, 16};
  config.trials = 2;
  config.master_seed = 3;
  config.anneal = quick_anneal();
  config.workers = 2;

  const auto rows = run_basis_count_sweep(config);
  REQUIRE(rows.size() == 2 * 4);
  CHECK(rows[0].scheme == "table1:4");
  CHECK(rows[0].m == 4);
  CHECK(rows[4].scheme == "table1:16");
  CHECK(rows[4].m == 16);
}

TEST_CASE("config validation rejects malformed grids") {
  SweepConfig config = quick_error_config();
  config.n_grid = {};
  CHECK_THROWS_AS(config.validate(), config_error);

  config = quick_error_config();
  config.n_grid = {100, 100};
  CHECK_THROWS_AS(config.validate(), config_error);

  config = quick_error_config();
  config.trials = 0;
  CHECK_THROWS_AS(config.validate(), config_error);

  config = quick_error_config();
  config.m_grid = {2};
  CHECK_THROWS_AS(config.validate(), config_error);

  config = quick_error_config();
  config.schemes.clear();
  CHECK_THROWS_AS(config.validate(), config_error);
}

TEST_CASE("csv writer emits the header, rows, and sidecar") {
  SweepConfig config = quick_error_config();
  const std::string path = temp_path("writer.csv");

  SUBCASE("empty row list gives a header-only file") {
    write_csv({}, path, config);
    const std::string text = slurp(path);
    CHECK(text ==
          "experiment,scheme,N,m,trial,seed_used,metric_name,metric_value,"
          "truth_value\n");
  }

  SUBCASE("one row gives two lines and truth stays empty") {
    SweepRow row;
    row.experiment = "error_sweep";
    row.scheme = "standard";
    row.n = 100;
    row.m = 4;
    row.trial = 0;
    row.seed_used = 12345;
    row.metric_name = "hs_distance";
    row.metric_value = 0.123456789012345;
    write_csv({row}, path, config);
    const std::string text = slurp(path);
    CHECK(text ==
          "experiment,scheme,N,m,trial,seed_used,metric_name,metric_value,"
          "truth_value\n"
          "error_sweep,standard,100,4,0,12345,hs_distance,0.123456789012,\n");
  }

  SUBCASE("round trip preserves 12 significant digits") {
    SweepRow row;
    row.experiment = "error_sweep";
    row.scheme = "overcomplete";
    row.n = 1000;
    row.m = 6;
    row.trial = 3;
    row.seed_used = 99;
    row.metric_name = "hs_distance";
    row.metric_value = 0.039482716253948;
    row.truth_value = -0.125;
    write_csv({row}, path, config);

    std::ifstream in(path);
    std::string line;
    std::getline(in, line);  // header
    std::getline(in, line);
    const auto fields = split_csv_line(line);
    REQUIRE(fields.size() == 9);
    CHECK(std::abs(std::stod(fields[7]) - row.metric_value) <
          1e-11 * std::abs(row.metric_value));
    CHECK(std::stod(fields[8]) == -0.125);
  }

  SUBCASE("sidecar records config, seed, and version") {
    write_csv({}, path, config);
    const std::string meta = slurp(path + ".meta.json");
    CHECK(meta.find("\"master_seed\": 42") != std::string::npos);
    CHECK(meta.find("\"library_version\"") != std::string::npos);
    CHECK(meta.find("hilbert-schmidt (ginibre)") != std::string::npos);
    CHECK(meta.find("\"experiment\": \"error_sweep\"") != std::string::npos);
    std::remove((path + ".meta.json").c_str());
  }

  std::remove(path.c_str());
  std::remove((path + ".meta.json").c_str());
}

TEST_CASE("mean error is monotone non-increasing in N (one inversion allowed)") {
  SweepConfig config = quick_error_config();
  config.schemes = {parse_scheme_string("overcomplete")};
  config.n_grid = {100, 1000, 10000};
  config.trials = 30;
  config.anneal = AnnealConfig{};

  const auto rows = run_error_sweep(config);
  std::vector<double> means, errs;
  for (const auto& row : rows) {
    if (row.metric_name == "hs_distance_mean") means.push_back(row.metric_value);
    if (row.metric_name == "hs_distance_stderr") errs.push_back(row.metric_value);
  }
  REQUIRE(means.size() == 3);
  int inversions = 0;
  for (size_t i = 1; i < means.size(); ++i) {
    if (means[i] > means[i - 1]) {
      ++inversions;
      const double combined =
          2.0 * std::sqrt(errs[i] * errs[i] + errs[i - 1] * errs[i - 1]);
      CHECK(means[i] - means[i - 1] < combined);
    }
  }
  CHECK(inversions <= 1);
}

TEST_CASE("mean_stderr basics") {
  const MeanStdErr single = mean_stderr({2.0});
  CHECK(single.mean == 2.0);
  CHECK(single.stderr_mean == 0.0);

  const MeanStdErr pair = mean_stderr({1.0, 3.0});
  CHECK(pair.mean == doctest::Approx(2.0));
  CHECK(pair.stderr_mean == doctest::Approx(1.0));
}

TEST_SUITE_END();
