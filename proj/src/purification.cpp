#include "qcorr/purification.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcorr/correlation.hpp"
#include "qcorr/partitions.hpp"

namespace qcorr {

namespace {

// Eigenvalues closer than this are treated as one degenerate eigenspace.
constexpr double kDegeneracyTol = 1e-9;
constexpr double kPivotTol = 1e-9;

int ceil_log2(int r) {
  int k = 0;
  while ((1 << k) < r) ++k;
  return k;
}

void fix_phase(Eigen::Ref<ComplexVector> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > kPivotTol) {
      v *= std::conj(v(i)) / std::abs(v(i));
      return;
    }
  }
}

// Canonical orthonormal basis of span(columns): reduced row-echelon form of
// the spanning rows, then modified Gram-Schmidt in pivot order.
ComplexMatrix canonical_basis(const ComplexMatrix& columns) {
  ComplexMatrix rows = columns.transpose();
  const Eigen::Index m = rows.rows();
  Eigen::Index lead = 0;
  for (Eigen::Index col = 0; col < rows.cols() && lead < m; ++col) {
    Eigen::Index pivot;
    const double best = rows.col(col).tail(m - lead).cwiseAbs().maxCoeff(&pivot);
    if (best <= kPivotTol) continue;
    pivot += lead;
    rows.row(lead).swap(rows.row(pivot));
    rows.row(lead) /= rows(lead, col);
    for (Eigen::Index r = 0; r < m; ++r) {
      if (r != lead) rows.row(r) -= rows(r, col) * rows.row(lead);
    }
    ++lead;
  }
  ComplexMatrix basis = rows.transpose();
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    for (Eigen::Index i = 0; i < j; ++i) {
      basis.col(j) -= basis.col(i).dot(basis.col(j)) * basis.col(i);
    }
    basis.col(j).normalize();
    fix_phase(basis.col(j));
  }
  return basis;
}

}  // namespace

int spectral_rank(const DensityOperator& rho, double threshold) {
  const auto spectrum = rho.spectrum();
  return static_cast<int>(std::count_if(spectrum.begin(), spectrum.end(), [&](double p) { return p > threshold; }));
}

int min_purifying_qubits(const DensityOperator& rho) { return ceil_log2(spectral_rank(rho)); }

PurificationResult purify(const DensityOperator& rho) {
  const ComplexMatrix h = (rho.matrix() + rho.matrix().adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::ComputeEigenvectors);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();

  // Walk the spectrum from the top, one degenerate cluster at a time.
  std::vector<double> weights;
  std::vector<ComplexVector> kets;
  Eigen::Index hi = values.size() - 1;
  while (hi >= 0 && values(hi) > kRankThreshold) {
    Eigen::Index lo = hi;
    while (lo > 0 && values(lo - 1) > kRankThreshold && values(hi) - values(lo - 1) <= kDegeneracyTol) --lo;
    const auto cluster = canonical_basis(vectors.middleCols(lo, hi - lo + 1));
    const double mean = values.segment(lo, hi - lo + 1).mean();
    for (Eigen::Index j = 0; j < cluster.cols(); ++j) {
      weights.push_back(mean);
      kets.push_back(cluster.col(j));
    }
    hi = lo - 1;
  }

  const int rank = static_cast<int>(kets.size());
  const int k = ceil_log2(rank);
  const int n = rho.n_qubits();
  ComplexVector amps = ComplexVector::Zero(detail::pow2(n + k));
  for (int i = 0; i < rank; ++i) {
    const double w = std::sqrt(weights[static_cast<std::size_t>(i)]);
    for (Eigen::Index label = 0; label < rho.dim(); ++label) {
      amps((label << k) | i) += w * kets[static_cast<std::size_t>(i)](label);
    }
  }
  amps.normalize();

  PurificationResult out{n, k, PureState(n + k, std::move(amps), 1e-8), 0.0};
  std::vector<int> system(static_cast<std::size_t>(n));
  std::iota(system.begin(), system.end(), 0);
  const ComplexMatrix back = partial_trace(to_density(out.purified).matrix(), n + k, system);
  out.residual = trace_distance(back, rho.matrix());
  return out;
}

bool is_maximally_correlated_purification(const PurificationResult& r) {
  const int total = r.system_qubits + r.ancilla_qubits;
  return std::abs(total_correlation(to_density(r.purified)) - total * kLn2) <= kIdentityTol;
}

}  // namespace qcorr
