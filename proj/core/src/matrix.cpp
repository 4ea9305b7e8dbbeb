#include "ocqst/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ocqst {

namespace {

bool is_power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

int check_dim(int dim) {
  if (dim < 2 || !is_power_of_two(dim)) {
    std::ostringstream msg;
    msg << "matrix dimension must be a power of two >= 2, got " << dim;
    throw validation_error(msg.str());
  }
  return dim;
}

int log2_int(int dim) {
  int n = 0;
  while ((1 << n) < dim) ++n;
  return n;
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim)
    : dim_(check_dim(dim)), entries_(static_cast<size_t>(dim) * dim) {}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(int dim,
                                       std::initializer_list<cplx> entries) {
  ComplexMatrix m(dim);
  if (entries.size() != m.entries_.size()) {
    throw validation_error("from_rows: entry count does not match dim^2");
  }
  std::copy(entries.begin(), entries.end(), m.entries_.begin());
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw dimension_mismatch_error("matrix add: dims differ");
  for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw dimension_mismatch_error("matrix sub: dims differ");
  for (size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw dimension_mismatch_error("matmul: dims differ");
  const int d = a.dim_;
  ComplexMatrix out(d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(dim_);
  for (size_t k = 0; k < entries_.size(); ++k)
    out.entries_[k] = std::conj(entries_[k]);
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& e : entries_) sum += std::norm(e);
  return std::sqrt(sum);
}

double ComplexMatrix::hermiticity_violation() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

void ComplexMatrix::hermitize() {
  for (int i = 0; i < dim_; ++i) {
    (*this)(i, i) = cplx((*this)(i, i).real(), 0.0);
    for (int j = 0; j < i; ++j) (*this)(j, i) = std::conj((*this)(i, j));
  }
}

PureState::PureState(std::vector<cplx> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw validation_error("pure state: empty amplitudes");
  double norm_sq = 0.0;
  for (const auto& a : amplitudes_) norm_sq += std::norm(a);
  if (norm_sq < 1e-300) throw validation_error("pure state: zero vector");
  // Inputs that are already unit within rounding pass through untouched,
  // so tensor products keep the exact Kronecker amplitudes.
  if (std::abs(norm_sq - 1.0) > 1e-12) {
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amplitudes_) a *= inv;
  }
}

ComplexMatrix PureState::outer() const {
  ComplexMatrix m(dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      m(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
  return m;
}

cplx inner_product(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim())
    throw dimension_mismatch_error("inner product: dims differ");
  cplx sum = 0.0;
  for (int i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

PureState tensor_product(const PureState& a, const PureState& b) {
  std::vector<cplx> out(static_cast<size_t>(a.dim()) * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return PureState(std::move(out));
}

DensityMatrix::DensityMatrix(ComplexMatrix m)
    : matrix_(std::move(m)), n_qubits_(log2_int(matrix_.dim())) {}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m) {
  return DensityMatrix(std::move(m));
}

namespace {

// Unitary 2x2 eigenbasis of the Hermitian block [[a, alpha], [conj(alpha), b]]:
// columns are eigenvectors for eigenvalues mid+r, mid-r.
struct BlockRotation {
  cplx vpp, vpq, vqp, vqq;
};

BlockRotation block_rotation(double a, double b, cplx alpha) {
  const double delta = 0.5 * (a - b);
  const double r = std::sqrt(delta * delta + std::norm(alpha));
  cplx x, y;  // eigenvector for the larger eigenvalue
  if (delta >= 0.0) {
    x = cplx(r + delta, 0.0);
    y = std::conj(alpha);
  } else {
    x = alpha;
    y = cplx(r - delta, 0.0);
  }
  const double n = std::sqrt(std::norm(x) + std::norm(y));
  x /= n;
  y /= n;
  // Orthogonal partner of (x, y) is (-conj(y), conj(x)).
  return {x, -std::conj(y), y, std::conj(x)};
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double hermitian_tol) {
  const double violation = m.hermiticity_violation();
  if (violation > hermitian_tol) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |M - M†| element is " << violation
        << " (tolerance " << hermitian_tol << ")";
    throw not_hermitian_error(msg.str());
  }

  const int d = m.dim();
  ComplexMatrix a = m;
  a.hermitize();
  ComplexMatrix v = ComplexMatrix::identity(d);

  const double scale = std::max(1.0, a.frobenius_norm());
  const double threshold = 1e-13 * scale;

  auto off_norm = [&]() {
    double sum = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) sum += 2.0 * std::norm(a(i, j));
    return std::sqrt(sum);
  };

  constexpr int max_sweeps = 60;
  int sweep = 0;
  while (off_norm() > threshold) {
    if (++sweep > max_sweeps)
      throw consistency_error("jacobi eigensolver failed to converge");
    for (int p = 0; p < d; ++p) {
      for (int q = p + 1; q < d; ++q) {
        if (std::abs(a(p, q)) == 0.0) continue;
        const BlockRotation rot =
            block_rotation(a(p, p).real(), a(q, q).real(), a(p, q));
        // a <- J† a J restricted to rows/columns p and q
        for (int i = 0; i < d; ++i) {
          const cplx aip = a(i, p), aiq = a(i, q);
          a(i, p) = aip * rot.vpp + aiq * rot.vqp;
          a(i, q) = aip * rot.vpq + aiq * rot.vqq;
        }
        for (int j = 0; j < d; ++j) {
          const cplx apj = a(p, j), aqj = a(q, j);
          a(p, j) = std::conj(rot.vpp) * apj + std::conj(rot.vqp) * aqj;
          a(q, j) = std::conj(rot.vpq) * apj + std::conj(rot.vqq) * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cplx(a(p, p).real(), 0.0);
        a(q, q) = cplx(a(q, q).real(), 0.0);
        for (int i = 0; i < d; ++i) {
          const cplx vip = v(i, p), viq = v(i, q);
          v(i, p) = vip * rot.vpp + viq * rot.vqp;
          v(i, q) = vip * rot.vpq + viq * rot.vqq;
        }
      }
    }
  }

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    return a(lhs, lhs).real() > a(rhs, rhs).real();
  });

  EigenSystem out;
  out.eigenvalues.resize(d);
  out.eigenvectors.assign(d, std::vector<cplx>(d));
  for (int k = 0; k < d; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (int i = 0; i < d; ++i) out.eigenvectors[k][i] = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double hermitian_tol) {
  return hermitian_eigensystem(m, hermitian_tol).eigenvalues;
}

DensityMatrix validate_density(const ComplexMatrix& m, double tol) {
  if (tol <= 0.0) throw validation_error("validate_density: tol must be > 0");

  const double hv = m.hermiticity_violation();
  if (hv > tol) {
    std::ostringstream msg;
    msg << "not Hermitian: max |M - M†| element is " << hv << " (tolerance "
        << tol << ")";
    throw not_hermitian_error(msg.str());
  }

  const cplx tr = m.trace();
  if (std::abs(tr.real() - 1.0) > tol || std::abs(tr.imag()) > tol) {
    std::ostringstream msg;
    msg << "trace is " << tr.real() << (tr.imag() < 0 ? " - " : " + ")
        << std::abs(tr.imag()) << "i, expected 1 (tolerance " << tol << ")";
    throw trace_not_one_error(msg.str());
  }

  const auto eigenvalues = hermitian_eigenvalues(m, std::max(tol, 1e-10));
  const double smallest = eigenvalues.back();
  if (smallest < -tol) {
    std::ostringstream msg;
    msg << "not positive semidefinite: smallest eigenvalue is " << smallest
        << " (tolerance " << -tol << ")";
    throw not_positive_error(msg.str());
  }

  return DensityMatrix::unchecked(m);
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
  const EigenSystem es = hermitian_eigensystem(m);
  const int d = m.dim();

  std::vector<double> roots(d);
  for (int k = 0; k < d; ++k) {
    double lambda = es.eigenvalues[k];
    if (lambda < -1e-9) {
      std::ostringstream msg;
      msg << "matrix_sqrt_psd: eigenvalue " << lambda << " is below -1e-9";
      throw not_positive_error(msg.str());
    }
    roots[k] = std::sqrt(std::max(lambda, 0.0));
  }

  ComplexMatrix out(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j) {
      cplx sum = 0.0;
      for (int k = 0; k < d; ++k)
        sum += roots[k] * es.eigenvectors[k][i] * std::conj(es.eigenvectors[k][j]);
      out(i, j) = sum;
    }
  }
  out.hermitize();
  return out;
}

}  // namespace ocqst
