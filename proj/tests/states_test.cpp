#include <doctest.h>

#include <cmath>

#include "ocqst/metrics.hpp"
#include "ocqst/states.hpp"
#include "test_helpers.hpp"

using namespace ocqst;
using namespace ocqst::testing;

namespace {
const double s2 = 1.0 / std::sqrt(2.0);
}

TEST_SUITE_BEGIN("states");

TEST_CASE("named single-qubit states") {
  const PureState left = named_pure("L", 1);
  CHECK(std::abs(left[0] - cplx(s2, 0.0)) < 1e-15);
  CHECK(std::abs(left[1] - cplx(0.0, s2)) < 1e-15);

  const PureState right = named_pure("R", 1);
  CHECK(std::abs(right[1] - cplx(0.0, -s2)) < 1e-15);

  const PureState minus = named_pure("-", 1);
  CHECK(std::abs(minus[1] - cplx(-s2, 0.0)) < 1e-15);
}

TEST_CASE("named Bell states follow the (|00>-|11>)/sqrt2 convention") {
  const PureState psi = named_pure("psi_minus", 2);
  CHECK(std::abs(psi[0] - cplx(s2, 0.0)) < 1e-15);
  CHECK(std::abs(psi[1]) == 0.0);
  CHECK(std::abs(psi[2]) == 0.0);
  CHECK(std::abs(psi[3] + cplx(s2, 0.0)) < 1e-15);

  const PureState phi = named_pure("phi_minus", 2);
  CHECK(std::abs(phi[1] - cplx(s2, 0.0)) < 1e-15);
  CHECK(std::abs(phi[2] + cplx(s2, 0.0)) < 1e-15);
}

TEST_CASE("multi-letter labels tensor left to right") {
  const PureState state = named_pure("+-", 2);
  CHECK(std::abs(state[0] - cplx(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(state[1] + cplx(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(state[2] - cplx(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(state[3] + cplx(0.5, 0.0)) < 1e-15);
}

TEST_CASE("unknown labels are rejected") {
  CHECK_THROWS_AS(named_pure("X", 1), unknown_label_error);
  CHECK_THROWS_AS(named_pure("01", 1), unknown_label_error);
  CHECK_THROWS_AS(named_pure("psi_minus", 1), unknown_label_error);
}

TEST_CASE("bell_diagonal(1) is the psi_minus projector") {
  const DensityMatrix rho = bell_diagonal(1.0);
  const ComplexMatrix expected = named_pure("psi_minus", 2).outer();
  CHECK(max_abs_diff(rho.matrix(), expected) < 1e-15);
}

TEST_CASE("bell_diagonal concurrences match the figure captions") {
  CHECK(concurrence_unclamped(bell_diagonal(0.8)) ==
        doctest::Approx(0.6).epsilon(1e-9));
  CHECK(std::abs(concurrence_unclamped(bell_diagonal(0.5))) < 1e-9);
}

TEST_CASE("bell_diagonal rejects out-of-range weights") {
  CHECK_THROWS_AS(bell_diagonal(-0.1), parameter_out_of_range_error);
  CHECK_THROWS_AS(bell_diagonal(1.1), parameter_out_of_range_error);
}

TEST_CASE("werner(0) is maximally mixed") {
  const DensityMatrix rho = werner(0.0);
  ComplexMatrix expected = ComplexMatrix::identity(4);
  expected *= cplx(0.25);
  CHECK(max_abs_diff(rho.matrix(), expected) < 1e-15);
}

TEST_CASE("werner concurrences match the figure captions") {
  CHECK(concurrence_unclamped(werner(0.25)) ==
        doctest::Approx(-0.125).epsilon(1e-9));
  CHECK(concurrence_unclamped(werner(0.5)) ==
        doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("werner rejects out-of-range weights") {
  CHECK_THROWS_AS(werner(-0.01), parameter_out_of_range_error);
  CHECK_THROWS_AS(werner(1.01), parameter_out_of_range_error);
}

TEST_CASE("closed-form unclamped concurrence across the parameter grids") {
  for (int step = 0; step <= 10; ++step) {
    const double p = 0.1 * step;
    CHECK(std::abs(concurrence_unclamped(bell_diagonal(p)) -
                   std::abs(2.0 * p - 1.0)) < 1e-9);
    CHECK(std::abs(concurrence_unclamped(werner(p)) - (3.0 * p - 1.0) / 2.0) <
          1e-9);
  }
}

TEST_CASE("family eigenvalues stay physical and show the expected ranks") {
  for (int step = 0; step <= 10; ++step) {
    const double p = 0.1 * step;

    const auto bell_eig = hermitian_eigenvalues(bell_diagonal(p).matrix());
    for (double lambda : bell_eig) {
      CHECK(lambda > -1e-12);
      CHECK(lambda < 1.0 + 1e-12);
    }
    // rank <= 2: the two smallest eigenvalues vanish
    CHECK(std::abs(bell_eig[2]) < 1e-12);
    CHECK(std::abs(bell_eig[3]) < 1e-12);

    const auto werner_eig = hermitian_eigenvalues(werner(p).matrix());
    for (double lambda : werner_eig) {
      CHECK(lambda > -1e-12);
      CHECK(lambda < 1.0 + 1e-12);
    }
    if (p < 1.0) CHECK(werner_eig[3] > 1e-12);  // full rank
  }
}

TEST_CASE("random_density is deterministic per seed") {
  RngStream a(1234);
  RngStream b(1234);
  const DensityMatrix rho_a = random_density(2, a);
  const DensityMatrix rho_b = random_density(2, b);
  CHECK(max_abs_diff(rho_a.matrix(), rho_b.matrix()) == 0.0);
}

TEST_CASE("random_density samples are valid states") {
  RngStream rng(5);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + static_cast<int>(rng.uniform_below(2));
    CHECK_NOTHROW(validate_density(random_density(n, rng).matrix(), 1e-9));
  }
}

TEST_CASE("random_density mean approaches the maximally mixed state") {
  RngStream rng(42);
  const int samples = 10000;
  ComplexMatrix sum(2);
  for (int round = 0; round < samples; ++round) {
    sum += random_density(1, rng).matrix();
  }
  sum *= cplx(1.0 / samples);
  const auto expected = ComplexMatrix::from_rows(2, {0.5, 0.0, 0.0, 0.5});
  CHECK(max_abs_diff(sum, expected) < 0.02);
}

TEST_CASE("random_pure produces unit vectors deterministically") {
  RngStream a(77);
  RngStream b(77);
  const PureState pa = random_pure(2, a);
  const PureState pb = random_pure(2, b);
  for (int i = 0; i < 4; ++i) CHECK(pa[i] == pb[i]);
  double norm = 0.0;
  for (int i = 0; i < 4; ++i) norm += std::norm(pa[i]);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_SUITE_END();
