#pragma once

#include "qcorr/states.hpp"

namespace qcorr {

inline constexpr double kRankThreshold = 1e-10;

struct PurificationResult {
  int system_qubits = 0;
  int ancilla_qubits = 0;
  PureState purified;  // system qubits first, ancilla register appended
  double residual = 0;  // trace distance between Tr_ancilla(purified) and the input
};

// Number of eigenvalues strictly above `threshold`.
int spectral_rank(const DensityOperator& rho, double threshold = kRankThreshold);

// ceil(log2(rank)); zero for a pure operator.
int min_purifying_qubits(const DensityOperator& rho);

// Spectral purification sum_i sqrt(lambda_i) |e_i> (x) |i> over the smallest
// ancilla register that holds the support.  Eigenvectors run by descending
// eigenvalue.  Inside a degenerate eigenspace the basis is the Gram-Schmidt
// orthonormalization of the space's reduced row-echelon form, and every
// vector is phased so its leading nonzero component is real and positive.
PurificationResult purify(const DensityOperator& rho);

// Total correlation of the purified state equals (system + ancilla) ln 2
// within 1e-8.
bool is_maximally_correlated_purification(const PurificationResult& r);

}  // namespace qcorr
