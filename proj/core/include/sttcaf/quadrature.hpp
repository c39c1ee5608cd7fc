// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include <vector>

namespace sttcaf {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point generalized Gauss-Laguerre rule for the weight x^alpha e^{-x} on
/// [0, inf), built by Golub-Welsch. Weights sum to Gamma(alpha + 1). Rules are
/// cached; the returned reference stays valid for the program lifetime.
const QuadratureRule& gauss_laguerre(int n, double alpha);

}  // namespace sttcaf
