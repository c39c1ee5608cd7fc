// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include "sttcaf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>
#include <stdexcept>

#include "sttcaf/error.hpp"

namespace sttcaf {

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

}  // namespace

HermitianEigen jacobi_eigen(const CMatrix& input, double tol, int max_sweeps) {
  if (input.rows() != input.cols()) throw std::invalid_argument("jacobi_eigen: matrix is not square");
  const Eigen::Index n = input.rows();
  const double scale = input.norm();
  if ((input - input.adjoint()).norm() > 1e-10 * std::max(scale, 1e-300))
    throw std::invalid_argument("jacobi_eigen: matrix is not Hermitian");

  CMatrix a = (input + input.adjoint()) / 2.0;
  CMatrix v = CMatrix::Identity(n, n);
  HermitianEigen out;

  const double target = tol * std::max(scale, 1e-300);
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Phase-rotate so the (p,q) entry is real, then apply a real rotation.
        const Complex phase = std::conj(apq) / mag;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // J restricted to (p,q): columns [c, -s*phase]^T and [s, c*phase]^T.
        const Complex g_pp = c, g_qp = -s * phase, g_pq = s, g_qq = c * phase;

        for (Eigen::Index k = 0; k < n; ++k) {  // A <- A J
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * g_pp + akq * g_qp;
          a(k, q) = akp * g_pq + akq * g_qq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {  // A <- J^H A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
          a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {  // V <- V J
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * g_pp + vkq * g_qp;
          v(k, q) = vkp * g_pq + vkq * g_qq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (off_diagonal_norm(a) > target)
    throw NumericalError("jacobi_eigen: no convergence after " + std::to_string(max_sweeps) + " sweeps");

  // Sort ascending, carrying eigenvectors along.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() < a(y, y).real(); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index src = order[static_cast<std::size_t>(i)];
    out.values(i) = a(src, src).real();
    out.vectors.col(i) = v.col(src);
  }
  out.sweeps = sweep;
  return out;
}

}  // namespace sttcaf
