// SPDX-License-Identifier: Apache-2.0
#include "vqgo/tomography/chi_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/pauli.hpp"

namespace vqgo {
namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_chi(std::ostream& os, const ProcessMatrix& p, const Metadata& meta) {
  const auto basis = pauli_basis(p.n);
  os << "# vqgo-chi 1\n";
  for (const auto& [k, v] : meta) os << "# " << k << ": " << v << "\n";
  os << "n " << p.n << "\nlabels";
  for (const auto& b : basis) os << ' ' << b.labels();
  os << "\n";
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const cplx v = p.chi(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      os << basis[r].labels() << ' ' << basis[c].labels() << ' ' << fmt_double(v.real()) << ' '
         << fmt_double(v.imag()) << "\n";
    }
}

void write_chi_file(const std::string& path, const ProcessMatrix& p, const Metadata& meta) {
  std::ofstream os(path);
  if (!os) fail(ErrorCategory::io, "cannot open " + path + " for writing");
  write_chi(os, p, meta);
  if (!os) fail(ErrorCategory::io, "write failed: " + path);
}

ProcessMatrix read_chi(std::istream& is, Metadata* meta) {
  std::string line;
  int n = -1;
  ProcessMatrix p;
  std::size_t entries = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto colon = line.find(": ");
      if (meta && colon != std::string::npos && line.rfind("# vqgo-chi", 0) != 0)
        (*meta)[line.substr(2, colon - 2)] = line.substr(colon + 2);
      continue;
    }
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "n") {
      ls >> n;
      if (n < 1 || n > 4) fail(ErrorCategory::io, "chi file: bad qubit count");
      p.n = n;
      p.chi = CMatrix::Zero(1 << (2 * n), 1 << (2 * n));
    } else if (head == "labels") {
      continue;
    } else {
      if (n < 0) fail(ErrorCategory::io, "chi file: entry before header");
      std::string col;
      double re = 0, im = 0;
      if (!(ls >> col >> re >> im)) fail(ErrorCategory::io, "chi file: malformed entry: " + line);
      p.chi(PauliString(head).index(), PauliString(col).index()) = cplx(re, im);
      ++entries;
    }
  }
  if (n < 0 || entries != static_cast<std::size_t>(p.chi.size())) fail(ErrorCategory::io, "chi file: incomplete");
  return p;
}

ProcessMatrix read_chi_file(const std::string& path, Metadata* meta) {
  std::ifstream is(path);
  if (!is) fail(ErrorCategory::io, "cannot open " + path);
  return read_chi(is, meta);
}

}  // namespace vqgo
