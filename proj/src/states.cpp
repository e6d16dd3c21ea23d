#include "qcorr/states.hpp"

#include <cmath>
#include <string>

namespace qcorr {

namespace {

ComplexVector basis_superposition(int n_qubits, std::span<const Eigen::Index> labels) {
  ComplexVector amps = ComplexVector::Zero(detail::pow2(n_qubits));
  const double weight = 1.0 / std::sqrt(static_cast<double>(labels.size()));
  for (auto label : labels) amps(label) = weight;
  return amps;
}

std::vector<double> spectrum_of(const ComplexMatrix& m) {
  const RealVector<double> values = hermitian_eigenvalues_only(m, kDensityTol);
  std::vector<double> out(values.data(), values.data() + values.size());
  for (auto& v : out) v = std::max(v, 0.0);
  return out;
}

}  // namespace

void require_qubit_cap(int n_qubits, int max_qubits) {
  if (n_qubits > max_qubits) {
    throw SizeError(std::to_string(n_qubits) + " qubits exceeds the cap of " + std::to_string(max_qubits));
  }
}

PureState::PureState(int n_qubits, ComplexVector amplitudes, double norm_tol)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits < 1 || n_qubits > 30) throw ArgumentError("qubit count out of range: " + std::to_string(n_qubits));
  if (amplitudes_.size() != detail::pow2(n_qubits)) {
    throw ShapeError("expected " + std::to_string(detail::pow2(n_qubits)) + " amplitudes, got " +
                     std::to_string(amplitudes_.size()));
  }
  if (!amplitudes_.allFinite()) throw ValidationError("amplitudes must be finite");
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > norm_tol) {
    throw NormalizationError("state norm^2 is " + std::to_string(norm2) + ", expected 1");
  }
}

PureState ghz(int n, int max_qubits) {
  if (n < 2) throw ArgumentError("ghz needs at least 2 qubits");
  require_qubit_cap(n, max_qubits);
  const Eigen::Index labels[] = {0, detail::pow2(n) - 1};
  return PureState(n, basis_superposition(n, labels));
}

PureState uniform_entangled(int n_per_side, int max_qubits) {
  if (n_per_side < 1) throw ArgumentError("uniform_entangled needs at least 1 qubit per side");
  const int n = 2 * n_per_side;
  require_qubit_cap(n, max_qubits);
  std::vector<Eigen::Index> labels;
  for (Eigen::Index s = 0; s < detail::pow2(n_per_side); ++s) labels.push_back((s << n_per_side) | s);
  return PureState(n, basis_superposition(n, labels));
}

PureState bell_product(int pairs, int max_qubits) {
  if (pairs < 1) throw ArgumentError("bell_product needs at least 1 pair");
  require_qubit_cap(2 * pairs, max_qubits);
  PureState out = ghz(2);
  for (int k = 1; k < pairs; ++k) out = tensor(out, ghz(2), max_qubits);
  return out;
}

PureState ghz_block_product(int n_per_block, int max_qubits) {
  if (n_per_block < 2) throw ArgumentError("ghz_block_product needs at least 2 qubits per block");
  require_qubit_cap(2 * n_per_block, max_qubits);
  return tensor(ghz(n_per_block), ghz(n_per_block), max_qubits);
}

PureState tensor(const PureState& left, const PureState& right, int max_qubits) {
  const int n = left.n_qubits() + right.n_qubits();
  require_qubit_cap(n, max_qubits);
  return PureState(n, kron(left.amplitudes(), right.amplitudes()));
}

PureState permute_qubits(const PureState& state, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != state.n_qubits()) {
    throw ArgumentError("permutation size does not match the qubit count");
  }
  return PureState(state.n_qubits(), qcorr::permute_qubits(state.amplitudes(), perm));
}

DensityOperator to_density(const PureState& s) {
  ComplexMatrix m = s.amplitudes() * s.amplitudes().adjoint();
  // Rank one with unit trace; the spectrum is known without diagonalizing.
  std::vector<double> spectrum(static_cast<std::size_t>(s.dim()), 0.0);
  spectrum.back() = 1.0;
  return DensityOperator(s.n_qubits(), std::move(m), std::move(spectrum));
}

DensityOperator validate_density(const ComplexMatrix& m, int n_qubits) {
  if (n_qubits < 1) throw ArgumentError("density operator needs at least 1 qubit");
  detail::require_register_dim(m.rows(), m.cols(), n_qubits);
  if (!m.allFinite()) throw ValidationError("density matrix has non-finite entries");
  if (max_hermitian_deviation(m) > kDensityTol) throw HermiticityError("density matrix is not Hermitian");
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kDensityTol) throw TraceError("density matrix trace is " + std::to_string(tr));
  const RealVector<double> values = hermitian_eigenvalues_only(m, kDensityTol);
  if (values.size() > 0 && values(0) < -kDensityTol) {
    throw PositivityError("density matrix has eigenvalue " + std::to_string(values(0)));
  }
  std::vector<double> spectrum(values.data(), values.data() + values.size());
  for (auto& v : spectrum) v = std::max(v, 0.0);
  ComplexMatrix h = (m + m.adjoint()) / 2.0;
  return DensityOperator(n_qubits, std::move(h), std::move(spectrum));
}

DensityOperator reduce(const DensityOperator& rho, std::span<const int> keep) {
  if (keep.empty()) throw ArgumentError("reduction must keep at least one qubit");
  ComplexMatrix m = partial_trace(rho.matrix(), rho.n_qubits(), keep);
  auto spectrum = spectrum_of(m);
  return DensityOperator(static_cast<int>(keep.size()), std::move(m), std::move(spectrum));
}

DensityOperator tensor(const DensityOperator& left, const DensityOperator& right) {
  return validate_density(kron(left.matrix(), right.matrix()), left.n_qubits() + right.n_qubits());
}

}  // namespace qcorr
