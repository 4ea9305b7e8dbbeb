#include "ocqst/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ocqst {

namespace {

// sigma_y ⊗ sigma_y in the computational basis (real).
ComplexMatrix spin_flip_operator() {
  ComplexMatrix f(4);
  f(0, 3) = -1.0;
  f(1, 2) = 1.0;
  f(2, 1) = 1.0;
  f(3, 0) = -1.0;
  return f;
}

void require_two_qubits(const DensityMatrix& rho, const char* where) {
  if (rho.n_qubits() != 2) {
    std::ostringstream msg;
    msg << where << ": needs a two-qubit state, got " << rho.n_qubits()
        << " qubit(s)";
    throw wrong_dimension_error(msg.str());
  }
}

}  // namespace

double hs_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << "hs_distance: dims " << a.dim() << " vs " << b.dim();
    throw dimension_mismatch_error(msg.str());
  }
  return (a.matrix() - b.matrix()).frobenius_norm();
}

ComplexMatrix spin_flip(const DensityMatrix& rho) {
  require_two_qubits(rho, "spin_flip");
  const ComplexMatrix f = spin_flip_operator();
  ComplexMatrix out = f * rho.matrix().conjugate() * f;
  out.hermitize();
  return out;
}

std::vector<double> r_matrix_eigenvalues(const DensityMatrix& rho) {
  require_two_qubits(rho, "r_matrix_eigenvalues");
  const ComplexMatrix root = matrix_sqrt_psd(rho.matrix());
  ComplexMatrix product = root * spin_flip(rho) * root;
  product.hermitize();

  // product is Hermitian PSD with the spectrum of rho * rho~, so the
  // eigenvalues of R are the square roots of its eigenvalues.
  std::vector<double> lambdas = hermitian_eigenvalues(product);
  for (double& lambda : lambdas) {
    if (lambda < -1e-9) {
      std::ostringstream msg;
      msg << "concurrence: eigenvalue " << lambda << " of sqrt(rho) rho~ "
          << "sqrt(rho) is below -1e-9";
      throw not_positive_error(msg.str());
    }
    lambda = std::sqrt(std::max(lambda, 0.0));
  }
  return lambdas;  // already descending
}

double concurrence_unclamped(const DensityMatrix& rho) {
  const std::vector<double> lambda = r_matrix_eigenvalues(rho);
  const double value = lambda[0] - lambda[1] - lambda[2] - lambda[3];
  if (value < -0.5 - 1e-7) {
    std::ostringstream msg;
    msg << "concurrence_unclamped: value " << value
        << " below -0.5, impossible for a physical state";
    throw consistency_error(msg.str());
  }
  return value;
}

double concurrence(const DensityMatrix& rho) {
  return std::max(0.0, concurrence_unclamped(rho));
}

}  // namespace ocqst
