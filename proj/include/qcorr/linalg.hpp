#pragma once

// Dense complex linear algebra over qubit registers.
//
// Basis labels are big-endian: in |q0 q1 ... q(n-1)> qubit 0 is the most
// significant bit of the amplitude index.  Every function here is a template
// over Eigen expressions so callers can pass blocks, adjoints or products
// without materializing them first.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "qcorr/errors.hpp"

namespace qcorr {

template <typename Real>
using Matrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using Vector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using ComplexMatrix = Matrix<double>;
using ComplexVector = Vector<double>;

// Largest number of entries kron() will produce.
inline constexpr Eigen::Index kMaxKronEntries = Eigen::Index{1} << 24;
inline constexpr double kHermitianTol = 1e-10;

template <typename Real>
struct EigenSpectrum {
  RealVector<Real> values;  // ascending
  Real residual = 0;        // off-diagonal Frobenius norm of V^H A V
};

namespace detail {

inline Eigen::Index pow2(int k) { return Eigen::Index{1} << k; }

// Full register index reached by scattering the bits of every local label
// onto `qubits` (local qubit i goes to register qubit qubits[i]).
inline std::vector<Eigen::Index> scatter_offsets(int n_qubits, std::span<const int> qubits) {
  const int k = static_cast<int>(qubits.size());
  std::vector<Eigen::Index> out(static_cast<std::size_t>(pow2(k)));
  for (Eigen::Index label = 0; label < pow2(k); ++label) {
    Eigen::Index full = 0;
    for (int i = 0; i < k; ++i) {
      if ((label >> (k - 1 - i)) & 1) full |= pow2(n_qubits - 1 - qubits[i]);
    }
    out[static_cast<std::size_t>(label)] = full;
  }
  return out;
}

inline void require_register_dim(Eigen::Index rows, Eigen::Index cols, int n_qubits) {
  if (n_qubits < 0 || n_qubits > 30) throw ArgumentError("qubit count out of range: " + std::to_string(n_qubits));
  if (rows != cols) throw ShapeError("matrix is not square");
  if (rows != pow2(n_qubits)) {
    throw ShapeError("matrix dimension " + std::to_string(rows) + " does not match 2^" + std::to_string(n_qubits));
  }
}

}  // namespace detail

// Register qubits not listed in `qubits`, ascending.
inline std::vector<int> qubit_complement(int n_qubits, std::span<const int> qubits) {
  std::vector<bool> used(static_cast<std::size_t>(n_qubits), false);
  for (int q : qubits) {
    if (q < 0 || q >= n_qubits) throw IndexError("qubit index " + std::to_string(q) + " out of range");
    used[static_cast<std::size_t>(q)] = true;
  }
  std::vector<int> rest;
  for (int q = 0; q < n_qubits; ++q) {
    if (!used[static_cast<std::size_t>(q)]) rest.push_back(q);
  }
  return rest;
}

template <typename DA, typename DB>
auto kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Plain = Eigen::Matrix<typename DA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const double entries = static_cast<double>(a.rows()) * static_cast<double>(a.cols()) *
                         static_cast<double>(b.rows()) * static_cast<double>(b.cols());
  if (entries > static_cast<double>(kMaxKronEntries)) {
    throw SizeError("kron result would exceed " + std::to_string(kMaxKronEntries) + " entries");
  }
  Plain out = Eigen::kroneckerProduct(a.eval(), b.eval());
  return out;
}

template <typename Derived>
auto max_hermitian_deviation(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename DA, typename DB>
double max_entry_distance(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("entry distance of mismatched matrices");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

namespace detail {

template <typename Derived>
auto symmetrized_hermitian(const Eigen::MatrixBase<Derived>& m, double tol) {
  using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (m.rows() != m.cols()) throw ShapeError("eigenvalues need a square matrix");
  if (m.size() > 0 && max_hermitian_deviation(m) > tol) {
    throw ShapeError("matrix is not Hermitian within tolerance");
  }
  Plain h = (m + m.adjoint()) / 2;
  return h;
}

}  // namespace detail

// Real spectrum of a Hermitian matrix plus the diagonalization residual.
template <typename Derived>
auto hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& m, double tol = kHermitianTol) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const auto h = detail::symmetrized_hermitian(m, tol);
  Eigen::SelfAdjointEigenSolver<std::decay_t<decltype(h)>> solver(h, Eigen::ComputeEigenvectors);
  EigenSpectrum<Real> out;
  out.values = solver.eigenvalues();
  auto rotated = (solver.eigenvectors().adjoint() * h * solver.eigenvectors()).eval();
  rotated.diagonal().setZero();
  out.residual = rotated.norm();
  return out;
}

// Eigenvalues only, ascending; no residual.  The hot path for entropies.
template <typename Derived>
auto hermitian_eigenvalues_only(const Eigen::MatrixBase<Derived>& m, double tol = kHermitianTol) {
  const auto h = detail::symmetrized_hermitian(m, tol);
  Eigen::SelfAdjointEigenSolver<std::decay_t<decltype(h)>> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().eval();
}

// Reduced operator on `keep`; result qubit i is register qubit keep[i].
template <typename Derived>
auto partial_trace(const Eigen::MatrixBase<Derived>& m, int n_qubits, std::span<const int> keep) {
  using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  detail::require_register_dim(m.rows(), m.cols(), n_qubits);
  const auto traced = qubit_complement(n_qubits, keep);
  if (traced.size() + keep.size() != static_cast<std::size_t>(n_qubits)) {
    throw IndexError("duplicate qubit index in partial trace");
  }
  const auto kept_at = detail::scatter_offsets(n_qubits, keep);
  const auto traced_at = detail::scatter_offsets(n_qubits, traced);
  const auto dim = static_cast<Eigen::Index>(kept_at.size());
  Plain out = Plain::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      typename Derived::Scalar acc{0};
      for (auto t : traced_at) acc += m(kept_at[r] | t, kept_at[c] | t);
      out(r, c) = acc;
    }
  }
  return out;
}

inline void require_permutation(std::span<const int> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= perm.size() || seen[static_cast<std::size_t>(p)]) {
      throw ArgumentError("qubit permutation is not a bijection");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
}

inline std::vector<int> inverse_permutation(std::span<const int> perm) {
  require_permutation(perm);
  std::vector<int> inv(perm.size());
  for (std::size_t q = 0; q < perm.size(); ++q) inv[static_cast<std::size_t>(perm[q])] = static_cast<int>(q);
  return inv;
}

// Moves register qubit q to position perm[q].
template <typename Derived>
auto permute_qubits(const Eigen::MatrixBase<Derived>& amplitudes, std::span<const int> perm) {
  using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1>;
  require_permutation(perm);
  const int n = static_cast<int>(perm.size());
  if (amplitudes.size() != detail::pow2(n)) throw ShapeError("amplitude count does not match permutation size");
  const auto target = detail::scatter_offsets(n, perm);
  Plain out(amplitudes.size());
  for (Eigen::Index x = 0; x < amplitudes.size(); ++x) out(target[static_cast<std::size_t>(x)]) = amplitudes(x);
  return out;
}

// Trace distance between two Hermitian matrices of equal dimension.
template <typename DA, typename DB>
double trace_distance(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("trace distance of mismatched matrices");
  const auto diff = (a - b).eval();
  return 0.5 * hermitian_eigenvalues_only(diff, 1e-8).cwiseAbs().sum();
}

}  // namespace qcorr
