#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ocqst/matrix.hpp"
#include "ocqst/rng.hpp"

namespace ocqst {

enum class BasisScheme { standard, overcomplete, table1_prefix };

std::string scheme_name(BasisScheme scheme);

// An ordered tomography measurement catalog.
struct BasisSet {
  std::vector<PureState> bases;
  std::vector<std::string> labels;
  BasisScheme scheme = BasisScheme::standard;
  int n_qubits = 1;

  int size() const { return static_cast<int>(bases.size()); }
};

// Shot allocation and observed counts for one simulated experiment.
// Counts are Poissonian, so an individual count can exceed its shot
// allocation; shots record how the budget was divided.
struct CountRecord {
  BasisSet basis_set;
  std::vector<std::int64_t> shots;
  std::vector<std::int64_t> counts;
  std::int64_t total_n = 0;

  int size() const { return basis_set.size(); }
};

// All 6^n tensor products of {0, 1, +, -, L, R}, lexicographic over the
// letter order (0, 1, +, -, L, R).
BasisSet overcomplete_set(int n_qubits);

// All 4^n tensor products of the minimal single-qubit set, lexicographic.
// The default letters are {0, 1, +, L}; alternates (any subset of the six
// letters) can be passed for sensitivity studies.
BasisSet standard_set(int n_qubits, std::string_view letters = "01+L");

// First m rows of the fixed 36-row two-qubit catalog, in row order.
// Rows 33-36 duplicate rows 12, 13, 22, 11; the table is reproduced
// verbatim, duplicates included.
BasisSet table1_prefix(int m);

// The label column of the full 36-row catalog (H and V mapped to 0 and 1).
const std::vector<std::string>& table1_labels();

// <psi| rho |psi>, clamped to [0, 1].
double born_probability(const PureState& basis, const DensityMatrix& rho);

// floor(N/m) per basis, with the first (N mod m) bases getting one extra.
std::vector<std::int64_t> allocate_shots(std::int64_t total_n, int m);

// Independent Poisson draws with rate shots[v] * born_probability(basis[v],
// rho) per basis, the counting statistics the Gaussian likelihood models.
CountRecord simulate_counts(const DensityMatrix& rho, const BasisSet& basis_set,
                            std::int64_t total_n, RngStream& rng);

}  // namespace ocqst
