#include "qcorr/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qcorr {

namespace {

void require_matching(const DensityOperator& rho, const Partition& part) {
  if (part.n_qubits() != rho.n_qubits()) {
    throw PartitionError("partition covers " + std::to_string(part.n_qubits()) + " qubits but the operator has " +
                         std::to_string(rho.n_qubits()));
  }
}

struct CutEntropies {
  double whole;
  double alpha;
  double beta;
};

CutEntropies cut_entropies(const DensityOperator& rho, const Partition& part) {
  require_matching(rho, part);
  return {von_neumann_entropy(rho), von_neumann_entropy(reduce(rho, part.alpha())),
          von_neumann_entropy(reduce(rho, part.beta()))};
}

}  // namespace

double entropy_of_spectrum(std::span<const double> spectrum) {
  double s = 0.0;
  for (double p : spectrum) {
    if (p > kEigenvalueFloor) s -= p * std::log(p);
  }
  return std::max(s, 0.0);
}

double von_neumann_entropy(const DensityOperator& rho) { return entropy_of_spectrum(rho.spectrum()); }

std::vector<double> single_qubit_entropies(const DensityOperator& rho) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(rho.n_qubits()));
  for (int q = 0; q < rho.n_qubits(); ++q) {
    const int keep[] = {q};
    out.push_back(von_neumann_entropy(reduce(rho, keep)));
  }
  return out;
}

double raw_total_correlation(const DensityOperator& rho) {
  const auto singles = single_qubit_entropies(rho);
  return std::accumulate(singles.begin(), singles.end(), 0.0) - von_neumann_entropy(rho);
}

double total_correlation(const DensityOperator& rho) { return std::max(raw_total_correlation(rho), 0.0); }

double raw_index_of_correlation(const DensityOperator& rho, const Partition& part) {
  const auto s = cut_entropies(rho, part);
  return s.alpha + s.beta - s.whole;
}

double index_of_correlation(const DensityOperator& rho, const Partition& part) {
  return std::max(raw_index_of_correlation(rho, part), 0.0);
}

double max_total_correlation(int n_qubits) {
  if (n_qubits < 1) throw ArgumentError("max_total_correlation needs at least 1 qubit");
  return n_qubits * kLn2;
}

BoundsReport correlation_bounds(std::span<const double> subsystem_entropies) {
  BoundsReport out;
  if (subsystem_entropies.empty()) return out;
  for (double s : subsystem_entropies) {
    if (!(s >= 0.0)) throw ArgumentError("subsystem entropies must be nonnegative");
  }
  out.quantum_upper = std::accumulate(subsystem_entropies.begin(), subsystem_entropies.end(), 0.0);
  out.gap_bound = *std::max_element(subsystem_entropies.begin(), subsystem_entropies.end());
  out.classical_upper = out.quantum_upper - out.gap_bound;
  return out;
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::Classical:
      return "classical";
    case Region::Quantum:
      return "quantum";
    case Region::Unattainable:
      return "unattainable";
  }
  return "unknown";
}

Region classify_region(double value, std::span<const double> max_entropies) {
  if (max_entropies.empty()) throw ArgumentError("classify_region needs at least one maximum entropy");
  if (!(value >= -kCorrelationTol)) throw ArgumentError("correlation value must be nonnegative");
  for (double s : max_entropies) {
    if (!(s > 0.0)) throw ArgumentError("maximum entropies must be positive");
  }
  const double inf = *std::min_element(max_entropies.begin(), max_entropies.end());
  if (value <= inf + kCorrelationTol) return Region::Classical;
  if (value <= 2.0 * inf + kCorrelationTol) return Region::Quantum;
  return Region::Unattainable;
}

ArakiLieb araki_lieb_check(const DensityOperator& rho, const Partition& part) {
  const auto s = cut_entropies(rho, part);
  return araki_lieb_from_entropies(s.whole, s.alpha, s.beta);
}

ArakiLieb araki_lieb_from_entropies(double whole, double alpha, double beta) {
  ArakiLieb out;
  out.lower_slack = whole - std::abs(alpha - beta);
  out.upper_slack = alpha + beta - whole;
  out.holds = out.lower_slack >= -kCorrelationTol && out.upper_slack >= -kCorrelationTol;
  return out;
}

}  // namespace qcorr
