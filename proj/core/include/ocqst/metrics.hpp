#pragma once

#include <string_view>
#include <vector>

#include "ocqst/matrix.hpp"

namespace ocqst {

// Metric names as they appear in CSV output.
inline constexpr std::string_view metric_hs_distance = "hs_distance";
inline constexpr std::string_view metric_concurrence = "concurrence";
inline constexpr std::string_view metric_concurrence_unclamped =
    "concurrence_unclamped";

// sqrt(Tr[(a-b)^2]): the Frobenius norm of the difference.
double hs_distance(const DensityMatrix& a, const DensityMatrix& b);

// (sigma_y ⊗ sigma_y) conj(rho) (sigma_y ⊗ sigma_y); two qubits only.
ComplexMatrix spin_flip(const DensityMatrix& rho);

// Eigenvalues of R = sqrt(sqrt(rho) rho~ sqrt(rho)) in decreasing order,
// computed as the square roots of the eigenvalues of the Hermitian matrix
// sqrt(rho) rho~ sqrt(rho) (same spectrum as rho rho~).
std::vector<double> r_matrix_eigenvalues(const DensityMatrix& rho);

// lambda_1 - lambda_2 - lambda_3 - lambda_4, no clamping.  Values below
// -0.5 by more than 1e-7 are impossible for physical states and raise
// consistency_error.
double concurrence_unclamped(const DensityMatrix& rho);

// max(0, concurrence_unclamped(rho))
double concurrence(const DensityMatrix& rho);

}  // namespace ocqst
