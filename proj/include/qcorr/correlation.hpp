#pragma once

// Entropy and correlation functionals.  All values are in nats.

#include <numbers>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qcorr/partition.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

inline constexpr double kLn2 = std::numbers::ln2;

// Spectrum entries at or below this contribute nothing to an entropy.
inline constexpr double kEigenvalueFloor = 1e-15;
inline constexpr double kCorrelationTol = 1e-9;

inline double nats_to_bits(double nats) { return nats / kLn2; }

// -sum p ln p over the entries above kEigenvalueFloor.
double entropy_of_spectrum(std::span<const double> spectrum);

double von_neumann_entropy(const DensityOperator& rho);

// S(rho_k) for every qubit k, in register order.
std::vector<double> single_qubit_entropies(const DensityOperator& rho);

// sum_k S(rho_k) - S(rho) before clamping; the clamped value is total_correlation.
double raw_total_correlation(const DensityOperator& rho);
double total_correlation(const DensityOperator& rho);

// S(rho_alpha) + S(rho_beta) - S(rho), clamped at zero.
double raw_index_of_correlation(const DensityOperator& rho, const Partition& part);
double index_of_correlation(const DensityOperator& rho, const Partition& part);

// n ln 2: every qubit maximally mixed and the register pure.
double max_total_correlation(int n_qubits);

struct BoundsReport {
  double classical_upper = 0;  // sum of entropies minus the largest
  double quantum_upper = 0;    // sum of entropies
  double gap_bound = 0;        // largest entropy
  std::optional<bool> araki_lieb_ok;  // set only when an operator was checked
};

BoundsReport correlation_bounds(std::span<const double> subsystem_entropies);

enum class Region { Classical, Quantum, Unattainable };

std::string_view to_string(Region region);

// Classical up to inf(max_entropies), Quantum up to twice that, Unattainable
// beyond.  Both boundaries are closed within kCorrelationTol, so a value equal
// to the infimum is Classical.  For more than two subsystems this is the
// two-band test as stated, not a reconciliation with the sum-based classical
// bound reported by correlation_bounds.
Region classify_region(double value, std::span<const double> max_entropies);

struct ArakiLieb {
  bool holds = false;
  double lower_slack = 0;  // S - |S_A - S_B|
  double upper_slack = 0;  // S_A + S_B - S
};

ArakiLieb araki_lieb_check(const DensityOperator& rho, const Partition& part);

// Same check from already computed S(rho), S(rho_A), S(rho_B).
ArakiLieb araki_lieb_from_entropies(double whole, double alpha, double beta);

}  // namespace qcorr
