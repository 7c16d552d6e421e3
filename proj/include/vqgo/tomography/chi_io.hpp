// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "vqgo/tomography/process_matrix.hpp"

namespace vqgo {

using Metadata = std::map<std::string, std::string>;

/// Text format:
///   # vqgo-chi 1
///   # <key>: <value>      (zero or more metadata lines)
///   n <qubits>
///   labels <4^n Pauli labels>
///   <row label> <col label> <re> <im>   (row-major, every entry)
void write_chi(std::ostream& os, const ProcessMatrix& p, const Metadata& meta = {});
void write_chi_file(const std::string& path, const ProcessMatrix& p, const Metadata& meta = {});

ProcessMatrix read_chi(std::istream& is, Metadata* meta = nullptr);
ProcessMatrix read_chi_file(const std::string& path, Metadata* meta = nullptr);

}  // namespace vqgo
