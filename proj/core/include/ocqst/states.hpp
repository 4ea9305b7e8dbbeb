#pragma once

#include <string>
#include <string_view>

#include "ocqst/matrix.hpp"
#include "ocqst/rng.hpp"

namespace ocqst {

enum class StateKind { bell_diagonal, werner, pure_named, random };

// Declarative description of a true state, as it appears in sweep
// configuration files.
struct StateSpec {
  StateKind kind = StateKind::random;
  double parameter = 0.0;   // b or q where applicable
  std::string label;        // pure_named only
  int n_qubits = 1;
  bool pure = false;        // random only: sample pure states instead of mixed
};

// Single-qubit letters 0, 1, +, -, L, R composed left-to-right by tensor
// product, or the two-qubit names psi_minus / phi_minus.
PureState named_pure(std::string_view label, int n_qubits);

// b |psi-><psi-| + (1-b) |phi-><phi-|, 0 <= b <= 1.
DensityMatrix bell_diagonal(double b);

// q |psi-><psi-| + (1-q) I/4, 0 <= q <= 1.
DensityMatrix werner(double q);

// Hilbert-Schmidt (Ginibre) sample: G with i.i.d. standard complex
// Gaussian entries, returned as G G† / Tr(G G†).
DensityMatrix random_density(int n_qubits, RngStream& rng);

// Haar-distributed pure state (normalized complex Gaussian vector).
PureState random_pure(int n_qubits, RngStream& rng);

// Materializes a StateSpec, drawing from rng when kind == random.
DensityMatrix make_state(const StateSpec& spec, RngStream& rng);

}  // namespace ocqst
