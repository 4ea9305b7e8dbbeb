#pragma once

#include <cstdint>
#include <vector>

#include "ocqst/matrix.hpp"
#include "ocqst/measure.hpp"
#include "ocqst/rng.hpp"

namespace ocqst {

// Real coordinates of a lower-triangular complex matrix T: the d diagonal
// entries first, then (re, im) of each strict lower-triangle entry in
// row-major order.  Length is exactly 4^n.  T†T / Tr(T†T) is physical for
// any coordinate values, which is what lets the annealer walk freely.
struct TParams {
  int n_qubits = 1;
  std::vector<double> values;

  static TParams maximally_mixed(int n_qubits);
  int dim() const { return 1 << n_qubits; }
};

struct AnnealConfig {
  double initial_temperature = 1.0;
  double cooling_factor = 0.95;
  int sweeps_per_temperature = 20;
  double proposal_scale = 0.1;
  double boltzmann_k = 1.0;
  // The stall window must outlast the cold-phase scale-halving cascade;
  // small windows abort the schedule while the temperature is still warm.
  int stall_window = 30;
  double stall_tolerance = 1e-6;
  int max_temperature_steps = 400;
  double likelihood_epsilon = 0.5;

  // Throws validation_error naming the first field out of range.
  void validate() const;
};

struct EstimateReport {
  DensityMatrix estimate;
  double final_neg_log_likelihood = 0.0;
  int temperature_steps_used = 0;
  std::int64_t accepted_moves = 0;
  std::int64_t proposed_moves = 0;
};

// T†T / Tr(T†T).  Throws degenerate_params_error when Tr(T†T) < 1e-300.
DensityMatrix params_to_density(const TParams& t);

// Sum over bases of (nbar - n)^2 / (2 max(nbar, eps)) with
// nbar = shots[v] * <psi_v| rho |psi_v>.  The Gaussian normalization
// constant is an additive constant and is dropped.
double neg_log_likelihood(const DensityMatrix& rho, const CountRecord& record,
                          double eps);

// Copy of t with one uniformly chosen coordinate perturbed by a
// N(0, scale^2) step.
TParams propose(const TParams& t, double scale, RngStream& rng);

// min{exp(-(l_new - l_old) / (k t)), 1}
double accept_probability(double l_new, double l_old, double k,
                          double temperature);

// Simulated annealing over TParams: geometric cooling from the maximally
// mixed start, sweeps_per_temperature * len(values) proposals per
// temperature, proposal scale halved whenever a temperature step accepts
// fewer than 10% of its moves.  Stops when the best value improves by
// less than stall_tolerance (relative) across stall_window consecutive
// temperature steps, or at max_temperature_steps.  Returns the best state
// ever visited.
EstimateReport anneal(const CountRecord& record, const AnnealConfig& config,
                      RngStream& rng);

// Exhaustive Bloch-ball grid minimizer of the single-qubit likelihood,
// kept as an independent check on the annealer.  r, theta, phi each take
// resolution+1 evenly spaced values over [0,1], [0,pi], [0,2pi].
DensityMatrix grid_oracle_1q(const CountRecord& record, int resolution,
                             double eps = 0.5);

}  // namespace ocqst
