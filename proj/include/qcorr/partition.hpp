#pragma once

#include <string>
#include <vector>

namespace qcorr {

// Split of the qubits {0..N-1} into two nonempty disjoint sides.  Both sides
// are kept sorted ascending.
class Partition {
 public:
  Partition(std::vector<int> alpha, std::vector<int> beta);

  // alpha as given, beta = every other qubit of an n-qubit register.
  static Partition from_alpha(int n_qubits, std::vector<int> alpha);

  int n_qubits() const noexcept { return static_cast<int>(alpha_.size() + beta_.size()); }
  const std::vector<int>& alpha() const noexcept { return alpha_; }
  const std::vector<int>& beta() const noexcept { return beta_; }

  // alpha followed by beta; the register reordering that puts alpha first.
  std::vector<int> ordering() const;

  Partition swapped() const { return Partition(beta_, alpha_); }

  // Same cut with qubit 0 on the alpha side.
  Partition canonical() const;

  // "ab|cd" for registers of up to 26 qubits, "0,1|2,3" beyond.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> alpha_;
  std::vector<int> beta_;
};

}  // namespace qcorr
