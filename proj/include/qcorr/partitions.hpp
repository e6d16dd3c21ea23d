#pragma once

#include <optional>
#include <vector>

#include "qcorr/correlation.hpp"
#include "qcorr/partition.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

// Tolerance for the sum identities tying a decomposition together.
inline constexpr double kIdentityTol = 1e-8;

// Total correlation split along one cut:
//   total = internal_alpha + internal_beta + external.
struct Decomposition {
  double internal_alpha = 0;
  double internal_beta = 0;
  double external = 0;
  double total = 0;
};

// A decomposition together with the three entropies it was built from.
struct CutAnalysis {
  Decomposition decomposition;
  double entropy_whole = 0;
  double entropy_alpha = 0;
  double entropy_beta = 0;
};

CutAnalysis analyze_cut(const DensityOperator& rho, const Partition& part);

Decomposition decompose(const DensityOperator& rho, const Partition& part);

// Decomposes a maximally correlated pure state across an equal cut (n|n) and
// checks external = 2 S(alpha) and internal = n ln 2 - S(alpha) on both sides.
// Throws PreconditionError naming the first requirement or identity that
// fails.
Decomposition pure_state_decomposition_identities(const PureState& s, const Partition& part);

// Every unordered bipartition once, with qubit 0 on the alpha side.  Without
// a size the list runs through alpha sizes 1..n-1, each in lexicographic
// order, for 2^(n-1) - 1 entries in total.
std::vector<Partition> enumerate_bipartitions(int n_qubits, std::optional<int> size_alpha = std::nullopt);

// rho == rho_alpha (x) rho_beta entrywise within tol, alpha qubits leading.
bool is_product_across(const DensityOperator& rho, const Partition& part, double tol = 1e-9);

// Common value of [int1(a) + int1(b)] - [int2(a) + int2(b)] and
// ext2 - ext1 for two decompositions with the same total.
double tradeoff_delta(const Decomposition& d1, const Decomposition& d2);

}  // namespace qcorr
