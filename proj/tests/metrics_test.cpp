#include <doctest.h>

#include <cmath>

#include "ocqst/metrics.hpp"
#include "ocqst/states.hpp"
#include "test_helpers.hpp"

using namespace ocqst;
using namespace ocqst::testing;

namespace {

DensityMatrix projector(const char* label, int n_qubits) {
  ComplexMatrix m = named_pure(label, n_qubits).outer();
  m.hermitize();
  return DensityMatrix::unchecked(std::move(m));
}

// Oracle route for the R spectrum: build R explicitly with a second
// matrix root, then eigensolve it.
std::vector<double> r_eigenvalues_via_root(const DensityMatrix& rho) {
  const ComplexMatrix root = matrix_sqrt_psd(rho.matrix());
  ComplexMatrix inner = root * spin_flip(rho) * root;
  inner.hermitize();
  const ComplexMatrix r = matrix_sqrt_psd(inner);
  return hermitian_eigenvalues(r);
}

}  // namespace

TEST_SUITE_BEGIN("metrics");

TEST_CASE("hs_distance of identical states is zero") {
  const DensityMatrix rho = werner(0.4);
  CHECK(hs_distance(rho, rho) == 0.0);
}

TEST_CASE("hs_distance of orthogonal projectors is sqrt(2)") {
  CHECK(hs_distance(projector("0", 1), projector("1", 1)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("hs_distance from the mixed state to a projector is sqrt(1/2)") {
  const DensityMatrix mixed =
      validate_density(ComplexMatrix::from_rows(2, {0.5, 0.0, 0.0, 0.5}), 1e-12);
  CHECK(hs_distance(mixed, projector("0", 1)) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("hs_distance rejects mismatched dimensions") {
  CHECK_THROWS_AS(hs_distance(projector("0", 1), werner(0.5)),
                  dimension_mismatch_error);
}

TEST_CASE("hs_distance satisfies the triangle inequality") {
  RngStream rng(17);
  for (int round = 0; round < 100; ++round) {
    const DensityMatrix a = random_density(2, rng);
    const DensityMatrix b = random_density(2, rng);
    const DensityMatrix c = random_density(2, rng);
    CHECK(hs_distance(a, c) <= hs_distance(a, b) + hs_distance(b, c) + 1e-10);
    CHECK(std::abs(hs_distance(a, b) - hs_distance(b, a)) < 1e-14);
  }
}

TEST_CASE("hs_distance is unitarily invariant") {
  RngStream rng(29);
  for (int round = 0; round < 30; ++round) {
    const DensityMatrix a = random_density(2, rng);
    const DensityMatrix b = random_density(2, rng);
    const ComplexMatrix u = random_unitary(4, rng);
    ComplexMatrix ua = conjugate_by(u, a.matrix());
    ComplexMatrix ub = conjugate_by(u, b.matrix());
    ua.hermitize();
    ub.hermitize();
    const double rotated = hs_distance(DensityMatrix::unchecked(std::move(ua)),
                                       DensityMatrix::unchecked(std::move(ub)));
    CHECK(std::abs(rotated - hs_distance(a, b)) < 1e-9);
  }
}

TEST_CASE("the singlet is spin-flip invariant") {
  const DensityMatrix psi = projector("psi_minus", 2);
  CHECK(max_abs_diff(spin_flip(psi), psi.matrix()) < 1e-12);
}

TEST_CASE("the maximally mixed state is spin-flip invariant") {
  const DensityMatrix mixed = werner(0.0);
  CHECK(max_abs_diff(spin_flip(mixed), mixed.matrix()) < 1e-15);
}

TEST_CASE("spin flip is an involution") {
  RngStream rng(53);
  for (int round = 0; round < 50; ++round) {
    const DensityMatrix rho = random_density(2, rng);
    const DensityMatrix flipped = DensityMatrix::unchecked(spin_flip(rho));
    CHECK(max_abs_diff(spin_flip(flipped), rho.matrix()) < 1e-13);
  }
}

TEST_CASE("spin flip needs two qubits") {
  CHECK_THROWS_AS(spin_flip(projector("0", 1)), wrong_dimension_error);
  CHECK_THROWS_AS(concurrence_unclamped(projector("0", 1)),
                  wrong_dimension_error);
}

TEST_CASE("figure-caption concurrence values") {
  CHECK(concurrence_unclamped(bell_diagonal(0.8)) ==
        doctest::Approx(0.6).epsilon(1e-9));
  CHECK(concurrence_unclamped(werner(0.25)) ==
        doctest::Approx(-0.125).epsilon(1e-9));
}

TEST_CASE("maximally mixed state has unclamped concurrence -1/2") {
  CHECK(concurrence_unclamped(werner(0.0)) ==
        doctest::Approx(-0.5).epsilon(1e-9));
}

TEST_CASE("clamped concurrence") {
  CHECK(concurrence(projector("psi_minus", 2)) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(concurrence(werner(0.25)) == 0.0);
  CHECK(concurrence(bell_diagonal(0.5)) == 0.0);
}

TEST_CASE("concurrence is invariant under local unitaries") {
  RngStream rng(61);
  for (int round = 0; round < 50; ++round) {
    const DensityMatrix rho = random_density(2, rng);
    const ComplexMatrix u = kron(random_unitary(2, rng), random_unitary(2, rng));
    ComplexMatrix rotated = conjugate_by(u, rho.matrix());
    rotated.hermitize();
    const double before = concurrence_unclamped(rho);
    const double after =
        concurrence_unclamped(DensityMatrix::unchecked(std::move(rotated)));
    CHECK(std::abs(before - after) < 1e-7);
  }
}

TEST_CASE("product states have non-positive unclamped concurrence") {
  RngStream rng(71);
  for (int round = 0; round < 50; ++round) {
    const DensityMatrix a = random_density(1, rng);
    const DensityMatrix b = random_density(1, rng);
    ComplexMatrix prod = kron(a.matrix(), b.matrix());
    prod.hermitize();
    CHECK(concurrence_unclamped(DensityMatrix::unchecked(std::move(prod))) <=
          1e-9);
  }
}

TEST_CASE("both R-spectrum routes agree") {
  RngStream rng(83);
  for (int round = 0; round < 50; ++round) {
    const DensityMatrix rho = random_density(2, rng);
    const auto fast = r_matrix_eigenvalues(rho);
    const auto oracle = r_eigenvalues_via_root(rho);
    REQUIRE(fast.size() == oracle.size());
    for (size_t k = 0; k < fast.size(); ++k) {
      CHECK(std::abs(fast[k] - oracle[k]) < 1e-7);
    }
  }
}

TEST_SUITE_END();
