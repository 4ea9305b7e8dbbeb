#include "ocqst/mle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace ocqst {

namespace {

int params_len(int dim) { return dim * dim; }

// Builds the lower-triangular T from the coordinate layout.
ComplexMatrix build_t(const TParams& t) {
  const int d = t.dim();
  ComplexMatrix m(d);
  int k = 0;
  for (int i = 0; i < d; ++i) m(i, i) = t.values[k++];
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < i; ++j) {
      const double re = t.values[k++];
      const double im = t.values[k++];
      m(i, j) = cplx(re, im);
    }
  }
  return m;
}

void check_params(const TParams& t) {
  const int expected = params_len(t.dim());
  if (static_cast<int>(t.values.size()) != expected) {
    std::ostringstream msg;
    msg << "TParams for " << t.n_qubits << " qubit(s) needs " << expected
        << " values, got " << t.values.size();
    throw validation_error(msg.str());
  }
}

}  // namespace

TParams TParams::maximally_mixed(int n_qubits) {
  TParams t;
  t.n_qubits = n_qubits;
  t.values.assign(params_len(1 << n_qubits), 0.0);
  for (int i = 0; i < (1 << n_qubits); ++i) t.values[i] = 1.0;
  return t;
}

void AnnealConfig::validate() const {
  auto fail = [](const std::string& what) {
    throw validation_error("anneal config: " + what);
  };
  if (!(initial_temperature > 0.0)) fail("initial_temperature must be > 0");
  if (!(cooling_factor > 0.0 && cooling_factor < 1.0))
    fail("cooling_factor must be in (0, 1)");
  if (sweeps_per_temperature < 1) fail("sweeps_per_temperature must be >= 1");
  if (!(proposal_scale > 0.0)) fail("proposal_scale must be > 0");
  if (!(boltzmann_k > 0.0)) fail("boltzmann_k must be > 0");
  if (stall_window < 1) fail("stall_window must be >= 1");
  if (!(stall_tolerance > 0.0)) fail("stall_tolerance must be > 0");
  if (max_temperature_steps < 1) fail("max_temperature_steps must be >= 1");
  if (!(likelihood_epsilon > 0.0)) fail("likelihood_epsilon must be > 0");
}

DensityMatrix params_to_density(const TParams& t) {
  check_params(t);
  double sum_sq = 0.0;
  for (double v : t.values) sum_sq += v * v;
  if (sum_sq < 1e-300) {
    throw degenerate_params_error("params_to_density: Tr(T†T) below 1e-300");
  }

  const ComplexMatrix tm = build_t(t);
  const int d = t.dim();

  // T†T, lower triangle then mirrored: (T†T)_ij = sum_k conj(T_ki) T_kj.
  // Tr(T†T) equals the coordinate sum of squares.
  ComplexMatrix h(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j) {
      cplx sum = 0.0;
      for (int k = i; k < d; ++k) sum += std::conj(tm(k, i)) * tm(k, j);
      h(i, j) = sum;
    }
  }
  h.hermitize();
  h *= cplx(1.0 / sum_sq);
  return DensityMatrix::unchecked(std::move(h));
}

double neg_log_likelihood(const DensityMatrix& rho, const CountRecord& record,
                          double eps) {
  if (!(eps > 0.0)) throw validation_error("neg_log_likelihood: eps must be > 0");
  if (record.size() > 0 && record.basis_set.bases.front().dim() != rho.dim()) {
    std::ostringstream msg;
    msg << "neg_log_likelihood: basis dim "
        << record.basis_set.bases.front().dim() << " vs state dim " << rho.dim();
    throw dimension_mismatch_error(msg.str());
  }

  double total = 0.0;
  for (int v = 0; v < record.size(); ++v) {
    const double expected = static_cast<double>(record.shots[v]) *
                            born_probability(record.basis_set.bases[v], rho);
    const double diff = expected - static_cast<double>(record.counts[v]);
    total += diff * diff / (2.0 * std::max(expected, eps));
  }
  return total;
}

TParams propose(const TParams& t, double scale, RngStream& rng) {
  if (!(scale > 0.0)) throw validation_error("propose: scale must be > 0");
  check_params(t);
  TParams out = t;
  const auto index = rng.uniform_below(out.values.size());
  out.values[index] += scale * rng.normal();
  return out;
}

double accept_probability(double l_new, double l_old, double k,
                          double temperature) {
  if (!(k > 0.0) || !(temperature > 0.0)) {
    throw validation_error("accept_probability: k and T must be > 0");
  }
  if (l_new <= l_old) return 1.0;
  return std::exp(-(l_new - l_old) / (k * temperature));
}

namespace {

// Fast likelihood path used inside the annealing loop: probabilities are
// real dot products against precomputed basis coefficient tables, so one
// evaluation costs O(m d^2) real multiplies with no allocation.
class LikelihoodTable {
 public:
  LikelihoodTable(const CountRecord& record, double eps)
      : dim_(record.basis_set.bases.empty() ? 1 << record.basis_set.n_qubits
                                            : record.basis_set.bases.front().dim()),
        eps_(eps),
        shots_(record.shots.begin(), record.shots.end()),
        counts_(record.counts.begin(), record.counts.end()) {
    const int d = dim_;
    const int m = record.size();
    coeff_.resize(static_cast<size_t>(m) * d * d * 2);
    for (int v = 0; v < m; ++v) {
      const PureState& psi = record.basis_set.bases[v];
      double* row = &coeff_[static_cast<size_t>(v) * d * d * 2];
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          const cplx c = std::conj(psi[i]) * psi[j];
          row[2 * (i * d + j)] = c.real();
          row[2 * (i * d + j) + 1] = -c.imag();
        }
      }
    }
  }

  double evaluate(const ComplexMatrix& rho) const {
    const int d = dim_;
    const auto& entries = rho.entries();
    double total = 0.0;
    const size_t stride = static_cast<size_t>(d) * d * 2;
    for (size_t v = 0; v < shots_.size(); ++v) {
      const double* row = &coeff_[v * stride];
      double p = 0.0;
      for (size_t k = 0; k < static_cast<size_t>(d) * d; ++k) {
        p += row[2 * k] * entries[k].real() + row[2 * k + 1] * entries[k].imag();
      }
      p = std::clamp(p, 0.0, 1.0);
      const double expected = shots_[v] * p;
      const double diff = expected - counts_[v];
      total += diff * diff / (2.0 * std::max(expected, eps_));
    }
    return total;
  }

 private:
  int dim_;
  double eps_;
  std::vector<double> shots_;
  std::vector<double> counts_;
  std::vector<double> coeff_;
};

}  // namespace

EstimateReport anneal(const CountRecord& record, const AnnealConfig& config,
                      RngStream& rng) {
  config.validate();
  if (record.size() == 0) throw validation_error("anneal: empty count record");
  const int n_qubits = record.basis_set.n_qubits;

  const LikelihoodTable table(record, config.likelihood_epsilon);

  TParams current = TParams::maximally_mixed(n_qubits);
  double current_l = table.evaluate(params_to_density(current).matrix());

  TParams best = current;
  double best_l = current_l;

  const int moves_per_step =
      config.sweeps_per_temperature * static_cast<int>(current.values.size());
  double temperature = config.initial_temperature;
  double scale = config.proposal_scale;

  std::int64_t accepted = 0;
  std::int64_t proposed = 0;
  int steps_used = 0;

  std::deque<double> best_history;  // best_l after each completed step

  for (int step = 0; step < config.max_temperature_steps; ++step) {
    int step_accepted = 0;
    for (int move = 0; move < moves_per_step; ++move) {
      TParams candidate = propose(current, scale, rng);
      ++proposed;
      double candidate_l;
      try {
        candidate_l = table.evaluate(params_to_density(candidate).matrix());
      } catch (const degenerate_params_error&) {
        continue;  // counted as rejected
      }
      const double p =
          accept_probability(candidate_l, current_l, config.boltzmann_k,
                             temperature);
      if (rng.uniform() < p) {
        current = std::move(candidate);
        current_l = candidate_l;
        ++accepted;
        ++step_accepted;
        if (current_l < best_l) {
          best = current;
          best_l = current_l;
        }
      }
    }

    ++steps_used;
    if (step_accepted * 10 < moves_per_step) scale *= 0.5;
    temperature *= config.cooling_factor;

    best_history.push_back(best_l);
    if (static_cast<int>(best_history.size()) > config.stall_window + 1) {
      best_history.pop_front();
    }
    if (static_cast<int>(best_history.size()) == config.stall_window + 1) {
      const double old_best = best_history.front();
      const double improvement = old_best - best_l;
      if (improvement <= config.stall_tolerance * std::max(old_best, 1e-12)) {
        break;
      }
    }
  }

  DensityMatrix estimate = params_to_density(best);
  const double final_l =
      neg_log_likelihood(estimate, record, config.likelihood_epsilon);
  return EstimateReport{std::move(estimate), final_l, steps_used, accepted,
                        proposed};
}

DensityMatrix grid_oracle_1q(const CountRecord& record, int resolution,
                             double eps) {
  if (record.basis_set.n_qubits != 1) {
    throw wrong_dimension_error("grid_oracle_1q: record is not single-qubit");
  }
  if (resolution < 8) {
    throw validation_error("grid_oracle_1q: resolution must be >= 8");
  }

  const LikelihoodTable table(record, eps);
  const double pi = 3.14159265358979323846;

  ComplexMatrix point(2);
  ComplexMatrix best_point(2);
  double best_value = 0.0;
  bool have_best = false;

  for (int ir = 0; ir <= resolution; ++ir) {
    const double r = static_cast<double>(ir) / resolution;
    for (int it = 0; it <= resolution; ++it) {
      const double theta = pi * static_cast<double>(it) / resolution;
      const double z = r * std::cos(theta);
      const double sin_theta = std::sin(theta);
      for (int ip = 0; ip <= resolution; ++ip) {
        const double phi = 2.0 * pi * static_cast<double>(ip) / resolution;
        const double x = r * sin_theta * std::cos(phi);
        const double y = r * sin_theta * std::sin(phi);
        // (I + x sigma_x + y sigma_y + z sigma_z) / 2
        point(0, 0) = 0.5 * (1.0 + z);
        point(1, 1) = 0.5 * (1.0 - z);
        point(0, 1) = 0.5 * cplx(x, -y);
        point(1, 0) = 0.5 * cplx(x, y);
        const double value = table.evaluate(point);
        if (!have_best || value < best_value) {
          best_value = value;
          best_point = point;
          have_best = true;
        }
      }
    }
  }
  return DensityMatrix::unchecked(std::move(best_point));
}

}  // namespace ocqst
