#include "ocqst/measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ocqst/states.hpp"

namespace ocqst {

namespace {

constexpr std::string_view overcomplete_letters = "01+-LR";

BasisSet product_set(int n_qubits, std::string_view letters,
                     BasisScheme scheme) {
  if (n_qubits < 1) throw validation_error("basis set: n_qubits must be >= 1");

  BasisSet set;
  set.scheme = scheme;
  set.n_qubits = n_qubits;

  const int k = static_cast<int>(letters.size());
  int count = 1;
  for (int i = 0; i < n_qubits; ++i) count *= k;

  for (int index = 0; index < count; ++index) {
    std::string label(n_qubits, '?');
    int rest = index;
    for (int pos = n_qubits - 1; pos >= 0; --pos) {
      label[pos] = letters[rest % k];
      rest /= k;
    }
    set.labels.push_back(label);
    set.bases.push_back(named_pure(label, n_qubits));
  }
  return set;
}

}  // namespace

std::string scheme_name(BasisScheme scheme) {
  switch (scheme) {
    case BasisScheme::standard: return "standard";
    case BasisScheme::overcomplete: return "overcomplete";
    case BasisScheme::table1_prefix: return "table1_prefix";
  }
  return "?";
}

BasisSet overcomplete_set(int n_qubits) {
  return product_set(n_qubits, overcomplete_letters, BasisScheme::overcomplete);
}

BasisSet standard_set(int n_qubits, std::string_view letters) {
  if (letters.empty()) throw validation_error("standard_set: empty letter set");
  for (char c : letters) {
    if (overcomplete_letters.find(c) == std::string_view::npos) {
      std::ostringstream msg;
      msg << "standard_set: letter '" << c << "' is not one of 01+-LR";
      throw validation_error(msg.str());
    }
  }
  return product_set(n_qubits, letters, BasisScheme::standard);
}

const std::vector<std::string>& table1_labels() {
  // Fixed 36-row catalog, H mapped to 0 and V to 1.  Rows 33-36 repeat
  // rows 12, 13, 22, 11; the duplicates are intentional fixtures.
  static const std::vector<std::string> labels = {
      "00", "01", "10", "11", "R0", "R1", "+1", "+0", "+R", "++",
      "R+", "0+", "1+", "1L", "0L", "RL", "LL", "-L", "-+", "--",
      "+-", "L+", "LR", "-R", "0R", "1R", "RR", "+L", "-0", "-1",
      "L0", "L1", "0+", "1+", "L+", "R+"};
  return labels;
}

BasisSet table1_prefix(int m) {
  const auto& labels = table1_labels();
  if (m < 1 || m > static_cast<int>(labels.size())) {
    std::ostringstream msg;
    msg << "table1_prefix: m = " << m << " outside [1, " << labels.size() << "]";
    throw out_of_range_error(msg.str());
  }
  BasisSet set;
  set.scheme = BasisScheme::table1_prefix;
  set.n_qubits = 2;
  for (int i = 0; i < m; ++i) {
    set.labels.push_back(labels[i]);
    set.bases.push_back(named_pure(labels[i], 2));
  }
  return set;
}

double born_probability(const PureState& basis, const DensityMatrix& rho) {
  if (basis.dim() != rho.dim()) {
    std::ostringstream msg;
    msg << "born_probability: basis dim " << basis.dim() << " vs state dim "
        << rho.dim();
    throw dimension_mismatch_error(msg.str());
  }
  const int d = basis.dim();
  const ComplexMatrix& m = rho.matrix();
  cplx sum = 0.0;
  for (int i = 0; i < d; ++i) {
    cplx row = 0.0;
    for (int j = 0; j < d; ++j) row += m(i, j) * basis[j];
    sum += std::conj(basis[i]) * row;
  }
  return std::clamp(sum.real(), 0.0, 1.0);
}

std::vector<std::int64_t> allocate_shots(std::int64_t total_n, int m) {
  if (total_n < 0) throw validation_error("allocate_shots: negative total");
  if (m < 1) throw validation_error("allocate_shots: m must be >= 1");
  const std::int64_t base = total_n / m;
  const std::int64_t extra = total_n % m;
  std::vector<std::int64_t> shots(m, base);
  for (std::int64_t i = 0; i < extra; ++i) ++shots[i];
  return shots;
}

CountRecord simulate_counts(const DensityMatrix& rho, const BasisSet& basis_set,
                            std::int64_t total_n, RngStream& rng) {
  if (basis_set.size() == 0) throw validation_error("simulate_counts: empty basis set");
  if (basis_set.bases.front().dim() != rho.dim()) {
    std::ostringstream msg;
    msg << "simulate_counts: basis dim " << basis_set.bases.front().dim()
        << " vs state dim " << rho.dim();
    throw dimension_mismatch_error(msg.str());
  }

  CountRecord record;
  record.basis_set = basis_set;
  record.total_n = total_n;
  record.shots = allocate_shots(total_n, basis_set.size());
  record.counts.resize(basis_set.size());
  for (int v = 0; v < basis_set.size(); ++v) {
    const double p = born_probability(basis_set.bases[v], rho);
    record.counts[v] =
        rng.poisson(static_cast<double>(record.shots[v]) * p);
  }
  return record;
}

}  // namespace ocqst
