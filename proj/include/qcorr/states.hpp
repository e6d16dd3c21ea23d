#pragma once

#include <span>
#include <vector>

#include "qcorr/linalg.hpp"

namespace qcorr {

// Default register cap: dense 4096 x 4096 operators at 12 qubits.
inline constexpr int kDefaultMaxQubits = 12;
inline constexpr double kNormTol = 1e-10;
inline constexpr double kDensityTol = 1e-10;

// Normalized amplitude vector over 2^n big-endian basis labels.
class PureState {
 public:
  PureState(int n_qubits, ComplexVector amplitudes, double norm_tol = kNormTol);

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dim() const noexcept { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  std::complex<double> operator[](Eigen::Index label) const { return amplitudes_(label); }

  friend bool operator==(const PureState& a, const PureState& b) {
    return a.n_qubits_ == b.n_qubits_ && a.amplitudes_ == b.amplitudes_;
  }

 private:
  int n_qubits_;
  ComplexVector amplitudes_;
};

// Hermitian, unit-trace, positive semidefinite operator on n qubits.  The
// spectrum is computed once on construction (ascending, negatives clamped to
// zero) so entropies never re-diagonalize.
class DensityOperator {
 public:
  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::span<const double> spectrum() const noexcept { return {spectrum_.data(), spectrum_.size()}; }

 private:
  DensityOperator(int n_qubits, ComplexMatrix matrix, std::vector<double> spectrum)
      : n_qubits_(n_qubits), matrix_(std::move(matrix)), spectrum_(std::move(spectrum)) {}

  friend DensityOperator validate_density(const ComplexMatrix&, int);
  friend DensityOperator to_density(const PureState&);
  friend DensityOperator reduce(const DensityOperator&, std::span<const int>);

  int n_qubits_;
  ComplexMatrix matrix_;
  std::vector<double> spectrum_;
};

// 1/sqrt(2) (|0...0> + |1...1>) on n >= 2 qubits.
PureState ghz(int n, int max_qubits = kDefaultMaxQubits);

// 2^{-n/2} sum_s |s,s> on 2n qubits; the left half is qubits 0..n-1.
PureState uniform_entangled(int n_per_side, int max_qubits = kDefaultMaxQubits);

// `pairs` Bell pairs 1/sqrt(2)(|00> + |11>) in qubit order a1 b1 a2 b2 ...
PureState bell_product(int pairs, int max_qubits = kDefaultMaxQubits);

// Two n-qubit GHZ blocks side by side; block alpha is qubits 0..n-1.
PureState ghz_block_product(int n_per_block, int max_qubits = kDefaultMaxQubits);

// Tensor product of two pure states, left factor on the leading qubits.
PureState tensor(const PureState& left, const PureState& right, int max_qubits = kDefaultMaxQubits);

PureState permute_qubits(const PureState& state, std::span<const int> perm);

DensityOperator to_density(const PureState& s);

// Wraps `m` after checking, in order: dimension, finite entries, Hermiticity,
// unit trace and positivity (each within 1e-10).  Each failure raises its own
// ValidationError subclass.
DensityOperator validate_density(const ComplexMatrix& m, int n_qubits);

// Reduced operator on `keep` (result qubit i = register qubit keep[i]).
DensityOperator reduce(const DensityOperator& rho, std::span<const int> keep);

DensityOperator tensor(const DensityOperator& left, const DensityOperator& right);

void require_qubit_cap(int n_qubits, int max_qubits);

}  // namespace qcorr
