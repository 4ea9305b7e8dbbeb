#pragma once

#include <complex>
#include <vector>

#include "ocqst/errors.hpp"

namespace ocqst {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major, dimension a power of two >= 2.
// Small by design: the estimation problem lives in dimensions 2 and 4.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix from_rows(int dim, std::initializer_list<cplx> entries);

  int dim() const { return dim_; }

  cplx& operator()(int i, int j) { return entries_[i * dim_ + j]; }
  const cplx& operator()(int i, int j) const { return entries_[i * dim_ + j]; }

  const std::vector<cplx>& entries() const { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx scalar);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs += rhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs -= rhs;
  }
  friend ComplexMatrix operator*(cplx scalar, ComplexMatrix m) {
    return m *= scalar;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;

  cplx trace() const;
  double frobenius_norm() const;

  // max_ij |M[i][j] - conj(M[j][i])|
  double hermiticity_violation() const;

  // Copies conj of the lower triangle into the upper one, making the
  // matrix exactly Hermitian (diagonal imaginary parts zeroed).
  void hermitize();

 private:
  int dim_;
  std::vector<cplx> entries_;
};

// Normalized complex state vector.
class PureState {
 public:
  // Normalizes the amplitudes; throws validation_error on a zero vector.
  explicit PureState(std::vector<cplx> amplitudes);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const cplx& operator[](int i) const { return amplitudes_[i]; }
  const std::vector<cplx>& amplitudes() const { return amplitudes_; }

  // |psi><psi|
  ComplexMatrix outer() const;

 private:
  std::vector<cplx> amplitudes_;
};

cplx inner_product(const PureState& a, const PureState& b);

// Kronecker composition: result[i*b.dim + j] = a[i] * b[j].
PureState tensor_product(const PureState& a, const PureState& b);

// A physical state: Hermitian, unit trace, positive semidefinite.
// Construct through validate_density, or through unchecked() on code
// paths that guarantee the invariants structurally.
class DensityMatrix {
 public:
  static DensityMatrix unchecked(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return matrix_; }
  int dim() const { return matrix_.dim(); }
  int n_qubits() const { return n_qubits_; }

 private:
  explicit DensityMatrix(ComplexMatrix m);

  ComplexMatrix matrix_;
  int n_qubits_;
};

// Result of a Hermitian eigendecomposition: eigenvalues descending,
// eigenvectors[k] the unit eigenvector matching eigenvalues[k].
struct EigenSystem {
  std::vector<double> eigenvalues;
  std::vector<std::vector<cplx>> eigenvectors;
};

// Cyclic complex Jacobi diagonalization.  Throws not_hermitian_error if
// the input deviates from Hermitian symmetry by more than hermitian_tol.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m,
                                  double hermitian_tol = 1e-10);

// Eigenvalues only, descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double hermitian_tol = 1e-10);

// Checks Hermiticity, unit trace, and positivity within tol; returns the
// matrix wrapped as a DensityMatrix without modification (eigenvalues in
// [-tol, 0) are accepted as-is).  Error messages carry the measured
// violation.
DensityMatrix validate_density(const ComplexMatrix& m, double tol);

// Principal square root of a Hermitian PSD matrix.  Eigenvalues in
// [-1e-9, 0) are clamped to zero before the root; below -1e-9 the matrix
// is rejected as not positive.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

}  // namespace ocqst
