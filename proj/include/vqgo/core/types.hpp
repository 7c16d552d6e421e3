// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include <Eigen/Dense>

namespace vqgo {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr cplx kI{0.0, 1.0};

/// A statistical estimate and its standard error.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

}  // namespace vqgo
