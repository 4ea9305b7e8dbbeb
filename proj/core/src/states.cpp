#include "ocqst/states.hpp"

#include <cmath>
#include <sstream>

namespace ocqst {

namespace {

const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

PureState single_letter(char letter) {
  switch (letter) {
    case '0': return PureState({1.0, 0.0});
    case '1': return PureState({0.0, 1.0});
    case '+': return PureState({inv_sqrt2, inv_sqrt2});
    case '-': return PureState({inv_sqrt2, -inv_sqrt2});
    case 'L': return PureState({inv_sqrt2, cplx(0.0, inv_sqrt2)});
    case 'R': return PureState({inv_sqrt2, cplx(0.0, -inv_sqrt2)});
    default: {
      std::ostringstream msg;
      msg << "unknown basis letter '" << letter << "'";
      throw unknown_label_error(msg.str());
    }
  }
}

}  // namespace

PureState named_pure(std::string_view label, int n_qubits) {
  if (label == "psi_minus" || label == "phi_minus") {
    if (n_qubits != 2) {
      throw unknown_label_error(std::string(label) + " requires n_qubits = 2");
    }
    if (label == "psi_minus") {
      return PureState({inv_sqrt2, 0.0, 0.0, -inv_sqrt2});
    }
    return PureState({0.0, inv_sqrt2, -inv_sqrt2, 0.0});
  }

  if (static_cast<int>(label.size()) != n_qubits) {
    std::ostringstream msg;
    msg << "label \"" << label << "\" has " << label.size()
        << " letters, expected " << n_qubits;
    throw unknown_label_error(msg.str());
  }

  PureState state = single_letter(label[0]);
  for (size_t i = 1; i < label.size(); ++i) {
    state = tensor_product(state, single_letter(label[i]));
  }
  return state;
}

DensityMatrix bell_diagonal(double b) {
  if (!(b >= 0.0 && b <= 1.0)) {
    std::ostringstream msg;
    msg << "bell_diagonal: b = " << b << " outside [0, 1]";
    throw parameter_out_of_range_error(msg.str());
  }
  const ComplexMatrix psi = named_pure("psi_minus", 2).outer();
  const ComplexMatrix phi = named_pure("phi_minus", 2).outer();
  ComplexMatrix rho = cplx(b) * psi + cplx(1.0 - b) * phi;
  rho.hermitize();
  return DensityMatrix::unchecked(std::move(rho));
}

DensityMatrix werner(double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    std::ostringstream msg;
    msg << "werner: q = " << q << " outside [0, 1]";
    throw parameter_out_of_range_error(msg.str());
  }
  ComplexMatrix rho = cplx(q) * named_pure("psi_minus", 2).outer() +
                      cplx(0.25 * (1.0 - q)) * ComplexMatrix::identity(4);
  rho.hermitize();
  return DensityMatrix::unchecked(std::move(rho));
}

DensityMatrix random_density(int n_qubits, RngStream& rng) {
  const int d = 1 << n_qubits;
  // Ginibre matrix: entries re + i*im with re, im ~ N(0, 1/2).
  ComplexMatrix g(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      g(i, j) = inv_sqrt2 * cplx(rng.normal(), rng.normal());
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  rho.hermitize();
  const double tr = rho.trace().real();
  rho *= cplx(1.0 / tr);
  return DensityMatrix::unchecked(std::move(rho));
}

PureState random_pure(int n_qubits, RngStream& rng) {
  const int d = 1 << n_qubits;
  std::vector<cplx> amps(d);
  for (auto& a : amps) a = cplx(rng.normal(), rng.normal());
  return PureState(std::move(amps));
}

DensityMatrix make_state(const StateSpec& spec, RngStream& rng) {
  switch (spec.kind) {
    case StateKind::bell_diagonal:
      return bell_diagonal(spec.parameter);
    case StateKind::werner:
      return werner(spec.parameter);
    case StateKind::pure_named: {
      ComplexMatrix rho = named_pure(spec.label, spec.n_qubits).outer();
      rho.hermitize();
      return DensityMatrix::unchecked(std::move(rho));
    }
    case StateKind::random: {
      if (spec.pure) {
        ComplexMatrix rho = random_pure(spec.n_qubits, rng).outer();
        rho.hermitize();
        return DensityMatrix::unchecked(std::move(rho));
      }
      return random_density(spec.n_qubits, rng);
    }
  }
  throw validation_error("make_state: unknown state kind");
}

}  // namespace ocqst
