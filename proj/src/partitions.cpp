#include "qcorr/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qcorr {

Partition::Partition(std::vector<int> alpha, std::vector<int> beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.empty() || beta_.empty()) throw PartitionError("both sides of a partition must be nonempty");
  std::sort(alpha_.begin(), alpha_.end());
  std::sort(beta_.begin(), beta_.end());
  const int n = n_qubits();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto* side : {&alpha_, &beta_}) {
    for (int q : *side) {
      if (q < 0 || q >= n) throw PartitionError("qubit " + std::to_string(q) + " outside a " + std::to_string(n) + "-qubit register");
      if (seen[static_cast<std::size_t>(q)]++) throw PartitionError("qubit " + std::to_string(q) + " listed twice");
    }
  }
}

Partition Partition::from_alpha(int n_qubits, std::vector<int> alpha) {
  for (int q : alpha) {
    if (q < 0 || q >= n_qubits) throw PartitionError("qubit " + std::to_string(q) + " out of range");
  }
  auto beta = qubit_complement(n_qubits, alpha);
  return Partition(std::move(alpha), std::move(beta));
}

std::vector<int> Partition::ordering() const {
  std::vector<int> out = alpha_;
  out.insert(out.end(), beta_.begin(), beta_.end());
  return out;
}

Partition Partition::canonical() const { return alpha_.front() == 0 ? *this : swapped(); }

std::string Partition::to_string() const {
  const bool letters = n_qubits() <= 26;
  std::ostringstream os;
  auto side = [&](const std::vector<int>& qs) {
    for (std::size_t i = 0; i < qs.size(); ++i) {
      if (letters) {
        os << static_cast<char>('a' + qs[i]);
      } else {
        os << (i ? "," : "") << qs[i];
      }
    }
  };
  side(alpha_);
  os << '|';
  side(beta_);
  return os.str();
}

CutAnalysis analyze_cut(const DensityOperator& rho, const Partition& part) {
  if (part.n_qubits() != rho.n_qubits()) throw PartitionError("partition does not match the operator's qubit count");
  const auto rho_alpha = reduce(rho, part.alpha());
  const auto rho_beta = reduce(rho, part.beta());
  CutAnalysis out;
  out.entropy_whole = von_neumann_entropy(rho);
  out.entropy_alpha = von_neumann_entropy(rho_alpha);
  out.entropy_beta = von_neumann_entropy(rho_beta);
  auto& d = out.decomposition;
  d.internal_alpha = total_correlation(rho_alpha);
  d.internal_beta = total_correlation(rho_beta);
  d.external = std::max(out.entropy_alpha + out.entropy_beta - out.entropy_whole, 0.0);
  d.total = total_correlation(rho);
  return out;
}

Decomposition decompose(const DensityOperator& rho, const Partition& part) { return analyze_cut(rho, part).decomposition; }

Decomposition pure_state_decomposition_identities(const PureState& s, const Partition& part) {
  if (part.n_qubits() != s.n_qubits()) throw PartitionError("partition does not match the state's qubit count");
  if (part.alpha().size() != part.beta().size()) {
    throw PreconditionError("equal cut required: |alpha| = |beta|");
  }
  const auto rho = to_density(s);
  const auto n = static_cast<double>(part.alpha().size());

  for (double sk : single_qubit_entropies(rho)) {
    if (std::abs(sk - kLn2) > kIdentityTol) throw PreconditionError("single-qubit entropy S_k = ln 2 violated");
  }
  const auto cut = analyze_cut(rho, part);
  const auto& d = cut.decomposition;
  if (std::abs(d.total - 2.0 * n * kLn2) > kIdentityTol) {
    throw PreconditionError("total correlation I(N) = 2n ln 2 violated");
  }

  const double s_alpha = cut.entropy_alpha;
  if (std::abs(d.external - 2.0 * s_alpha) > kIdentityTol) {
    throw PreconditionError("identity I_ext = 2 S(alpha) violated");
  }
  if (std::abs(d.internal_alpha - (n * kLn2 - s_alpha)) > kIdentityTol) {
    throw PreconditionError("identity I_int(alpha) = n ln 2 - S(alpha) violated");
  }
  if (std::abs(d.internal_beta - (n * kLn2 - s_alpha)) > kIdentityTol) {
    throw PreconditionError("identity I_int(beta) = n ln 2 - S(alpha) violated");
  }
  return d;
}

namespace {

// Appends {0} + every (k-1)-subset of {1..n-1}, lexicographically.
void append_alpha_size(int n, int k, std::vector<Partition>& out) {
  std::vector<int> pick(static_cast<std::size_t>(k - 1));
  for (int i = 0; i < k - 1; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    std::vector<int> alpha{0};
    alpha.insert(alpha.end(), pick.begin(), pick.end());
    out.push_back(Partition::from_alpha(n, std::move(alpha)));
    int i = k - 2;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (k - 1) + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k - 1; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<Partition> enumerate_bipartitions(int n_qubits, std::optional<int> size_alpha) {
  if (n_qubits < 1) throw ArgumentError("bipartitions need at least 1 qubit");
  std::vector<Partition> out;
  if (size_alpha) {
    if (*size_alpha < 1 || *size_alpha >= n_qubits) {
      throw ArgumentError("alpha size must lie in [1, " + std::to_string(n_qubits - 1) + "]");
    }
    append_alpha_size(n_qubits, *size_alpha, out);
    return out;
  }
  for (int k = 1; k < n_qubits; ++k) append_alpha_size(n_qubits, k, out);
  return out;
}

bool is_product_across(const DensityOperator& rho, const Partition& part, double tol) {
  if (part.n_qubits() != rho.n_qubits()) throw PartitionError("partition does not match the operator's qubit count");
  const int n = rho.n_qubits();
  const auto& m = rho.matrix();
  const ComplexMatrix ra = partial_trace(m, n, part.alpha());
  const ComplexMatrix rb = partial_trace(m, n, part.beta());
  // Entry (a_i b_i, a_j b_j) of the alpha-first reordering sits at
  // (sa[a_i] | sb[b_i], sa[a_j] | sb[b_j]) of the register matrix.
  const auto sa = detail::scatter_offsets(n, part.alpha());
  const auto sb = detail::scatter_offsets(n, part.beta());
  const auto da = static_cast<Eigen::Index>(sa.size());
  const auto db = static_cast<Eigen::Index>(sb.size());
  for (Eigen::Index aj = 0; aj < da; ++aj) {
    for (Eigen::Index bj = 0; bj < db; ++bj) {
      const Eigen::Index col = sa[static_cast<std::size_t>(aj)] | sb[static_cast<std::size_t>(bj)];
      for (Eigen::Index ai = 0; ai < da; ++ai) {
        const std::complex<double> a = ra(ai, aj);
        for (Eigen::Index bi = 0; bi < db; ++bi) {
          const Eigen::Index row = sa[static_cast<std::size_t>(ai)] | sb[static_cast<std::size_t>(bi)];
          if (std::abs(m(row, col) - a * rb(bi, bj)) > tol) return false;
        }
      }
    }
  }
  return true;
}

double tradeoff_delta(const Decomposition& d1, const Decomposition& d2) {
  if (std::abs(d1.total - d2.total) > kIdentityTol) {
    throw PreconditionError("trade-off needs equal total correlation");
  }
  const double internal_change = (d1.internal_alpha + d1.internal_beta) - (d2.internal_alpha + d2.internal_beta);
  const double external_change = d2.external - d1.external;
  if (std::abs(internal_change - external_change) > kIdentityTol) {
    throw PreconditionError("internal and external changes disagree");
  }
  return internal_change;
}

}  // namespace qcorr
