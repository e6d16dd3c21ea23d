#include <gtest/gtest.h>

#include <random>

#include "qcorr/partitions.hpp"
#include "qcorr/purification.hpp"
#include "support.hpp"

using namespace qcorr;
using testing_support::all_qubits;

namespace {

DensityOperator ghz4_ab() {
  const int ab[] = {0, 1};
  return reduce(to_density(ghz(4)), ab);
}

DensityOperator ue2_ab() {
  const int ab[] = {0, 1};
  return reduce(to_density(uniform_entangled(2)), ab);
}

std::vector<int> ancilla_of(const PurificationResult& r) {
  std::vector<int> out;
  for (int q = r.system_qubits; q < r.system_qubits + r.ancilla_qubits; ++q) out.push_back(q);
  return out;
}

ComplexMatrix traced_back(const PurificationResult& r) {
  const auto system = all_qubits(r.system_qubits);
  return partial_trace(to_density(r.purified).matrix(), r.system_qubits + r.ancilla_qubits, system);
}

}  // namespace

TEST(spectral_rank, examples) {
  EXPECT_EQ(spectral_rank(to_density(ghz(4))), 1);
  EXPECT_EQ(spectral_rank(ghz4_ab()), 2);
  EXPECT_EQ(spectral_rank(validate_density(ComplexMatrix::Identity(4, 4) / 4.0, 2)), 4);
}

TEST(min_purifying_qubits, examples) {
  EXPECT_EQ(min_purifying_qubits(ghz4_ab()), 1);
  EXPECT_EQ(min_purifying_qubits(ue2_ab()), 2);
  EXPECT_EQ(min_purifying_qubits(to_density(ghz(2))), 0);
}

TEST(min_purifying_qubits, rank_three_needs_two) {
  const auto rho = validate_density(testing_support::bell_diagonal({0.5, 0.3, 0.2, 0.0}), 2);
  EXPECT_EQ(spectral_rank(rho), 3);
  EXPECT_EQ(min_purifying_qubits(rho), 2);
}

TEST(purify, ghz_reduction_gives_three_qubit_state) {
  const auto r = purify(ghz4_ab());
  EXPECT_EQ(r.system_qubits, 2);
  EXPECT_EQ(r.ancilla_qubits, 1);
  EXPECT_EQ(r.purified.n_qubits(), 3);
  EXPECT_LE(r.residual, 1e-9);
  EXPECT_NEAR(von_neumann_entropy(reduce(to_density(r.purified), ancilla_of(r))), kLn2, 1e-12);
  // The canonical choice lands on the 3-qubit GHZ state.
  EXPECT_LE((r.purified.amplitudes() - ghz(3).amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(purify, pure_input_is_returned_unchanged) {
  std::mt19937_64 rng(2);
  const auto s = testing_support::random_pure(3, rng);
  const auto r = purify(to_density(s));
  EXPECT_EQ(r.ancilla_qubits, 0);
  // Equal up to a global phase.
  const std::complex<double> overlap = s.amplitudes().dot(r.purified.amplitudes());
  EXPECT_NEAR(std::abs(overlap), 1.0, 1e-12);
  EXPECT_LE(r.residual, 1e-9);
}

TEST(purify, maximally_mixed_pair_gives_uniform_entangled_state) {
  const auto r = purify(validate_density(ComplexMatrix::Identity(4, 4) / 4.0, 2));
  EXPECT_EQ(r.ancilla_qubits, 2);
  EXPECT_NEAR(decompose(to_density(r.purified), Partition({0, 1}, {2, 3})).external, 4 * kLn2, 1e-12);
  EXPECT_LE((r.purified.amplitudes() - uniform_entangled(2).amplitudes()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(purify, deterministic) {
  const auto a = purify(ue2_ab());
  const auto b = purify(ue2_ab());
  EXPECT_EQ(a.purified, b.purified);
}

TEST(purify, canonical_basis_is_invariant_under_rotation_inside_degenerate_space) {
  // Same operator assembled from two different bases of its support.
  ComplexVector u(4), v(4);
  u << 1, 0, 0, 0;
  v << 0, 0, 0, 1;
  const ComplexVector p = (u + v) / std::sqrt(2.0);
  const ComplexVector m = (u - v) / std::sqrt(2.0);
  const auto a = purify(validate_density(0.5 * (u * u.adjoint() + v * v.adjoint()), 2));
  const auto b = purify(validate_density(0.5 * (p * p.adjoint() + m * m.adjoint()), 2));
  EXPECT_LE((a.purified.amplitudes() - b.purified.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(purify, round_trip_on_random_operators) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 3;
    const auto rho = testing_support::random_density(n, rng);
    const auto r = purify(rho);
    EXPECT_EQ(r.ancilla_qubits, min_purifying_qubits(rho));
    EXPECT_LE(r.residual, 1e-9);
    EXPECT_LE(max_entry_distance(traced_back(r), rho.matrix()), 1e-9);
    const double ancilla_entropy =
        r.ancilla_qubits == 0 ? 0.0 : von_neumann_entropy(reduce(to_density(r.purified), ancilla_of(r)));
    EXPECT_NEAR(ancilla_entropy, von_neumann_entropy(rho), 1e-8);
  }
}

TEST(is_maximally_correlated_purification, examples) {
  const auto ghz_case = purify(ghz4_ab());
  EXPECT_TRUE(is_maximally_correlated_purification(ghz_case));
  EXPECT_NEAR(total_correlation(to_density(ghz_case.purified)), 3 * kLn2, 1e-8);

  const int ab[] = {0, 1};
  const auto generic = purify(reduce(to_density(testing_support::intermediate_state(0.3)), ab));
  EXPECT_EQ(generic.ancilla_qubits, 1);
  EXPECT_FALSE(is_maximally_correlated_purification(generic));

  const auto bell = purify(to_density(ghz(2)));
  EXPECT_EQ(bell.ancilla_qubits, 0);
  EXPECT_TRUE(is_maximally_correlated_purification(bell));
}

TEST(is_maximally_correlated_purification, only_the_ghz_boundary_along_the_family) {
  const int ab[] = {0, 1};
  for (double t : {0.0, 0.05, 0.2, 0.4, 0.6, 0.75}) {
    const auto r = purify(reduce(to_density(testing_support::intermediate_state(t)), ab));
    EXPECT_EQ(r.ancilla_qubits, 1);
    EXPECT_EQ(is_maximally_correlated_purification(r), t == 0.0) << "t = " << t;
  }
}

// Two-qubit operators with both single-qubit reductions maximally mixed:
// rank at most two forces the correlation into [ln 2, 2 ln 2].
TEST(single_ancilla_claim, rank_two_implies_quantum_band) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double two[] = {kLn2, kLn2};
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::array<double, 4> w{};
    const int support = 1 + trial % 4;
    double sum = 0;
    for (int i = 0; i < support; ++i) sum += (w[static_cast<std::size_t>(i)] = u(rng) + 1e-3);
    for (auto& x : w) x /= sum;
    std::shuffle(w.begin(), w.end(), rng);
    const ComplexMatrix local = testing_support::random_local_unitary(2, rng);
    const auto rho = validate_density(local * testing_support::bell_diagonal(w) * local.adjoint(), 2);
    for (double s : single_qubit_entropies(rho)) ASSERT_NEAR(s, kLn2, 1e-9);
    const double value = index_of_correlation(rho, Partition({0}, {1}));
    if (min_purifying_qubits(rho) <= 1) {
      ++checked;
      EXPECT_GE(value, kLn2 - 1e-9);
      EXPECT_NE(classify_region(value, two), Region::Unattainable);
    }
  }
  EXPECT_GT(checked, 100);
}

// The converse does not hold: full-rank or rank-three operators can still sit
// inside the band.
TEST(single_ancilla_claim, converse_counterexample) {
  const auto rho = validate_density(testing_support::bell_diagonal({0.9, 0.05, 0.05, 0.0}), 2);
  const double two[] = {kLn2, kLn2};
  EXPECT_EQ(classify_region(index_of_correlation(rho, Partition({0}, {1})), two), Region::Quantum);
  EXPECT_EQ(min_purifying_qubits(rho), 2);
}
