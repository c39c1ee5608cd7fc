// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include "sttcaf/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include <Eigen/Eigenvalues>

namespace sttcaf {

namespace {

QuadratureRule build_laguerre(int n, double alpha) {
  Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < n; ++i) sub(i - 1) = std::sqrt(i * (i + alpha));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw std::runtime_error("gauss_laguerre: eigensolver failed");

  const double mu0 = std::tgamma(alpha + 1.0);
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

const QuadratureRule& gauss_laguerre(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
  if (!(alpha > -1.0)) throw std::invalid_argument("gauss_laguerre: alpha must exceed -1");
  static std::mutex mutex;
  static std::map<std::pair<int, double>, QuadratureRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({n, alpha});
  if (it == cache.end()) it = cache.emplace(std::make_pair(n, alpha), build_laguerre(n, alpha)).first;
  return it->second;
}

}  // namespace sttcaf
