#pragma once

// Random generators and fixture states shared by the unit and acceptance
// suites.

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "qcorr/partition.hpp"
#include "qcorr/states.hpp"

namespace testing_support {

using qcorr::ComplexMatrix;
using qcorr::ComplexVector;

inline ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = {normal(rng), normal(rng)};
  return g;
}

// Random unit-trace positive operator of random rank on n qubits.
inline ComplexMatrix random_density_matrix(int n, std::mt19937_64& rng) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::uniform_int_distribution<Eigen::Index> rank(1, dim);
  const auto g = ginibre(dim, rank(rng), rng);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

inline qcorr::DensityOperator random_density(int n, std::mt19937_64& rng) {
  return qcorr::validate_density(random_density_matrix(n, rng), n);
}

inline qcorr::PureState random_pure(int n, std::mt19937_64& rng) {
  ComplexVector v = ginibre(Eigen::Index{1} << n, 1, rng).col(0);
  return qcorr::PureState(n, v.normalized());
}

// Haar-ish unitary: Q of a Ginibre QR with the diagonal phases of R removed.
inline ComplexMatrix random_unitary(Eigen::Index dim, std::mt19937_64& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(dim, dim, rng));
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

inline ComplexMatrix random_local_unitary(int n, std::mt19937_64& rng) {
  ComplexMatrix u = ComplexMatrix::Identity(1, 1);
  for (int q = 0; q < n; ++q) u = qcorr::kron(u, random_unitary(2, rng));
  return u;
}

inline qcorr::Partition random_partition(int n, std::mt19937_64& rng) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> cut(1, n - 1);
  const int k = cut(rng);
  return qcorr::Partition({order.begin(), order.begin() + k}, {order.begin() + k, order.end()});
}

// cos(t)/sqrt2 (|0000> + |1111>) + sin(t)/sqrt2 (|0011> + |1100>): every qubit
// maximally mixed and the register pure for all t.  t = 0 is GHZ(4) and
// t = pi/4 is the Bell-pair product; in between I_int(ab) sweeps (ln 2, 2 ln 2).
inline qcorr::PureState intermediate_state(double t) {
  ComplexVector amps = ComplexVector::Zero(16);
  const double c = std::cos(t) / std::sqrt(2.0);
  const double s = std::sin(t) / std::sqrt(2.0);
  amps(0b0000) = c;
  amps(0b1111) = c;
  amps(0b0011) = s;
  amps(0b1100) = s;
  return qcorr::PureState(4, amps);
}

// Bell-diagonal two-qubit operator with the given weights on
// Phi+, Phi-, Psi+, Psi-; both single-qubit marginals are maximally mixed.
inline ComplexMatrix bell_diagonal(const std::array<double, 4>& w) {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexVector phi_p(4), phi_m(4), psi_p(4), psi_m(4);
  phi_p << r, 0, 0, r;
  phi_m << r, 0, 0, -r;
  psi_p << 0, r, r, 0;
  psi_m << 0, r, -r, 0;
  return w[0] * phi_p * phi_p.adjoint() + w[1] * phi_m * phi_m.adjoint() + w[2] * psi_p * psi_p.adjoint() +
         w[3] * psi_m * psi_m.adjoint();
}

inline std::vector<int> all_qubits(int n) {
  std::vector<int> q(static_cast<std::size_t>(n));
  std::iota(q.begin(), q.end(), 0);
  return q;
}

}  // namespace testing_support
