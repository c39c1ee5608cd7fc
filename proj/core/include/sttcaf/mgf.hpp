// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include <cstddef>
#include <string_view>

#include "sttcaf/random.hpp"
#include "sttcaf/spectrum.hpp"

namespace sttcaf {

// Moment generating function of ||H Omega||^2 = a * b, where
// a = ||g||^2 ~ Gamma(N, 1) and b = sum_i lambda_i |h_i|^2, evaluated at s <= 0.

enum class MgfMethod { exact_quadrature, monte_carlo, asymptotic };

std::string_view to_string(MgfMethod m);

struct MgfValue {
  double value = 1.0;
  MgfMethod method = MgfMethod::exact_quadrature;
  double s = 0.0;
  double std_error = 0.0;  // Monte Carlo only
};

/// E[exp(s b)] = prod_i 1 / (1 - lambda_i s). Requires s <= 0.
double mgf_b(const Spectrum& spec, double s);

/// (1/Gamma(N)) int_0^inf x^{N-1} e^{-x} / prod_i (1 - lambda_i s x) dx.
///
/// Tries generalized Gauss-Laguerre at 64 and 128 nodes and accepts the
/// 128-node value when the two agree to 1e-6 relative. Otherwise (large
/// lambda |s|, where the integrand has a narrow feature near x = 0) it
/// integrates adaptively in t = log x. Throws NumericalError when the
/// adaptive estimate does not reach 1e-6 relative accuracy, and
/// std::invalid_argument for N < 1 or s > 0.
MgfValue mgf_exact(const Spectrum& spec, int N, double s);

enum class McSampling { plain, importance };

/// Monte Carlo estimate of E[exp(s a b)], a ~ Gamma(N, 1), b = sum lambda_i |h_i|^2.
///
/// plain draws a and h from the model and averages. For N >= M and large |s|
/// that estimator is dominated by rare draws with a b ~ 1/|s| and its
/// reported standard error is unreliable. importance (default) draws a and
/// each |h_i|^2 from a half/half mix of its own law and a log-uniform law on
/// [1e-4 min(1, 1/(|s| lambda_max)), 2] and weights by the density ratio
/// (each weight <= 2, so the variance stays finite). Neither scheme uses the
/// closed-form conditional MGF. Requires samples >= 10^4.
MgfValue mgf_monte_carlo(const Spectrum& spec, int N, double s, std::size_t samples, Rng& rng,
                         McSampling scheme = McSampling::importance);

/// Leading high-|s| term, returned as a positive value for s < 0:
///   N > M:  Gamma(N-M) / (Gamma(N) prod lambda) |s|^-M
///   N = M:  log|s| / (Gamma(N) prod lambda) |s|^-N
///   N < M:  |sum_j (log lambda_j / lambda_j^N) prod_{i!=j} lambda_j/(lambda_j - lambda_i)| / (Gamma(N) |s|^N)
/// Throws std::domain_error for zero eigenvalues, for repeated eigenvalues
/// (relative gap <= 1e-6) when N <= M, and for |s| <= 1 when N = M.
MgfValue mgf_asymptotic(const Spectrum& spec, int N, double s);

/// sum_j (log lambda_j / lambda_j^N) prod_{i!=j} lambda_j / (lambda_j - lambda_i),
/// the signed partial-fraction sum shared by the N < M asymptote and the
/// log-eigenvalue design metric.
double log_eig_partial_fraction_sum(const Spectrum& spec, int N);

}  // namespace sttcaf
