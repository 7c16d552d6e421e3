// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "vqgo/core/types.hpp"

namespace vqgo {

/// Tensor product of single-qubit Paulis. Labels use 'I', 'X', 'Y', 'Z';
/// the leftmost label acts on qubit 1, which is the most significant bit of
/// the computational basis index.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::string labels);

  static PauliString from_index(int n, int index);

  const std::string& labels() const noexcept { return labels_; }
  int num_qubits() const noexcept { return static_cast<int>(labels_.size()); }
  /// Position in pauli_basis(n).
  int index() const;
  /// Number of non-identity factors.
  int weight() const;
  bool is_identity() const { return weight() == 0; }

  CMatrix matrix() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::string labels_;
};

const CMatrix& pauli_matrix(char label);

/// All 4^n strings, lexicographic in I < X < Y < Z with the identity first.
std::vector<PauliString> pauli_basis(int n);

/// Coefficients c_k = tr[sigma_k^dagger m] / d in the pauli_basis order.
CVector pauli_coefficients(const CMatrix& m);
/// Inverse of pauli_coefficients.
CMatrix from_pauli_coefficients(const CVector& c);

}  // namespace vqgo
