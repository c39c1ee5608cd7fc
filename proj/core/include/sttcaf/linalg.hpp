// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace sttcaf {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct HermitianEigen {
  Eigen::VectorXd values;  // ascending
  CMatrix vectors;         // columns are eigenvectors
  int sweeps = 0;
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix. Intended for
/// the small (M <= 8) Gram matrices that appear in pairwise-error analysis;
/// converges to off(A) <= tol * ||A||_F. Throws NumericalError after
/// max_sweeps without convergence and std::invalid_argument for non-square
/// or non-Hermitian input.
HermitianEigen jacobi_eigen(const CMatrix& a, double tol = 1e-15, int max_sweeps = 60);

}  // namespace sttcaf
