// SPDX-License-Identifier: Apache-2.0
#include "vqgo/core/pauli.hpp"

#include <array>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"

namespace vqgo {
namespace {

constexpr std::string_view kLabels = "IXYZ";

int label_digit(char c) {
  const auto pos = kLabels.find(c);
  require(pos != std::string_view::npos, std::string("unknown Pauli label '") + c + "'");
  return static_cast<int>(pos);
}

const std::array<CMatrix, 4>& single_paulis() {
  static const std::array<CMatrix, 4> p = [] {
    std::array<CMatrix, 4> m;
    for (auto& x : m) x = CMatrix::Zero(2, 2);
    m[0] << 1, 0, 0, 1;
    m[1] << 0, 1, 1, 0;
    m[2] << 0, cplx(0, -1), cplx(0, 1), 0;
    m[3] << 1, 0, 0, -1;
    return m;
  }();
  return p;
}

}  // namespace

PauliString::PauliString(std::string labels) : labels_(std::move(labels)) {
  require(!labels_.empty(), "PauliString: empty label string");
  for (char c : labels_) label_digit(c);
}

PauliString PauliString::from_index(int n, int index) {
  require(n >= 1, "PauliString::from_index: n must be >= 1");
  require(index >= 0 && index < (1 << (2 * n)), "PauliString::from_index: index out of range");
  std::string s(static_cast<std::size_t>(n), 'I');
  for (int q = n - 1; q >= 0; --q) {
    s[static_cast<std::size_t>(q)] = kLabels[static_cast<std::size_t>(index % 4)];
    index /= 4;
  }
  return PauliString(s);
}

int PauliString::index() const {
  int idx = 0;
  for (char c : labels_) idx = 4 * idx + label_digit(c);
  return idx;
}

int PauliString::weight() const {
  int w = 0;
  for (char c : labels_) w += (c != 'I');
  return w;
}

CMatrix PauliString::matrix() const {
  std::vector<CMatrix> f;
  f.reserve(labels_.size());
  for (char c : labels_) f.push_back(pauli_matrix(c));
  return kron_all(f);
}

const CMatrix& pauli_matrix(char label) { return single_paulis()[static_cast<std::size_t>(label_digit(label))]; }

std::vector<PauliString> pauli_basis(int n) {
  require(n >= 1, "pauli_basis: n must be >= 1");
  require(n <= 8, "pauli_basis: n too large");
  const int count = 1 << (2 * n);
  std::vector<PauliString> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out.push_back(PauliString::from_index(n, k));
  return out;
}

CVector pauli_coefficients(const CMatrix& m) {
  const auto d = m.rows();
  int n = 0;
  while ((Eigen::Index{1} << n) < d) ++n;
  require((Eigen::Index{1} << n) == d && m.cols() == d, "pauli_coefficients: dimension is not 2^n");
  const auto basis = pauli_basis(n);
  CVector c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    c(static_cast<Eigen::Index>(k)) = (basis[k].matrix().adjoint() * m).trace() / static_cast<double>(d);
  return c;
}

CMatrix from_pauli_coefficients(const CVector& c) {
  int n = 0;
  while ((Eigen::Index{1} << (2 * n)) < c.size()) ++n;
  require((Eigen::Index{1} << (2 * n)) == c.size() && n >= 1, "from_pauli_coefficients: length is not 4^n");
  const auto basis = pauli_basis(n);
  CMatrix m = CMatrix::Zero(1 << n, 1 << n);
  for (std::size_t k = 0; k < basis.size(); ++k) m += c(static_cast<Eigen::Index>(k)) * basis[k].matrix();
  return m;
}

}  // namespace vqgo
