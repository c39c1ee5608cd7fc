// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include "sttcaf/mgf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sttcaf/error.hpp"
#include "sttcaf/quadrature.hpp"

namespace sttcaf {

namespace {

constexpr double kSelfCheckTol = 1e-6;

void check_args(int N, double s) {
  if (N < 1) throw std::invalid_argument("mgf: N must be >= 1");
  if (!(s <= 0.0)) throw std::invalid_argument("mgf: argument s must be <= 0");
}

// Scaled eigenvalues a_i = lambda_i |s| > 0.
std::vector<double> scaled_rates(const Spectrum& spec, double s) {
  std::vector<double> a;
  for (double l : spec.lambdas)
    if (l > 0.0) a.push_back(l * -s);
  return a;
}

double inverse_product(const std::vector<double>& a, double x) {
  double p = 1.0;
  for (double ai : a) p *= 1.0 + ai * x;
  return 1.0 / p;
}

double laguerre_value(const std::vector<double>& a, int N, int order) {
  const QuadratureRule& rule = gauss_laguerre(order, N - 1.0);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) sum += rule.weights[k] * inverse_product(a, rule.nodes[k]);
  return sum / std::tgamma(static_cast<double>(N));
}

double adaptive_value(const std::vector<double>& a, int N) {
  double a_max = 0.0;
  for (double ai : a) a_max = std::max(a_max, ai);
  const double x_lo = 1e-14 * std::min(1.0, 1.0 / a_max);
  const double x_hi = N + 60.0;
  const double log_gamma = std::lgamma(static_cast<double>(N));

  auto integrand = [&](double t) {
    const double x = std::exp(t);
    return std::exp(N * t - x - log_gamma) * inverse_product(a, x);
  };
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, std::log(x_lo), std::log(x_hi), 30, 1e-12, &error);
  if (!(error <= kSelfCheckTol * std::abs(value)) || !std::isfinite(value))
    throw NumericalError("mgf_exact: adaptive quadrature did not converge (estimate " + std::to_string(value) +
                         ", error " + std::to_string(error) + ")");
  return value;
}

}  // namespace

std::string_view to_string(MgfMethod m) {
  switch (m) {
    case MgfMethod::exact_quadrature: return "exact_quadrature";
    case MgfMethod::monte_carlo: return "monte_carlo";
    case MgfMethod::asymptotic: return "asymptotic";
  }
  return "unknown";
}

double mgf_b(const Spectrum& spec, double s) {
  if (!(s <= 0.0)) throw std::invalid_argument("mgf_b: argument s must be <= 0");
  double p = 1.0;
  for (double l : spec.lambdas) p *= 1.0 - l * s;
  return 1.0 / p;
}

MgfValue mgf_exact(const Spectrum& spec, int N, double s) {
  check_args(N, s);
  MgfValue out{1.0, MgfMethod::exact_quadrature, s, 0.0};
  const auto a = scaled_rates(spec, s);
  if (a.empty()) return out;

  const double v64 = laguerre_value(a, N, 64);
  const double v128 = laguerre_value(a, N, 128);
  if (std::abs(v64 - v128) <= kSelfCheckTol * std::abs(v128)) {
    out.value = v128;
  } else {
    out.value = adaptive_value(a, N);
  }
  return out;
}

namespace {

// Half own law, half log-uniform on [lo, hi]. Returns the weight p/q.
struct DefensiveMix {
  double lo, hi, log_span;
  std::uniform_real_distribution<double> unit{0.0, 1.0};

  template <class Dist>
  double draw(Dist& own, Rng& rng, double shape, double& x) {
    x = unit(rng) < 0.5 ? own(rng) : lo * std::exp(unit(rng) * log_span);
    if (x <= 0.0) return 2.0;  // only the own law reaches here, log-uniform density is 0
    const double p = std::exp((shape - 1.0) * std::log(x) - x - std::lgamma(shape));
    const double pu = (x >= lo && x <= hi) ? 1.0 / (x * log_span) : 0.0;
    return p / (0.5 * p + 0.5 * pu);
  }
};

}  // namespace

MgfValue mgf_monte_carlo(const Spectrum& spec, int N, double s, std::size_t samples, Rng& rng,
                         McSampling scheme) {
  check_args(N, s);
  if (samples < 10'000) throw std::invalid_argument("mgf_monte_carlo: need at least 10^4 samples");
  MgfValue out{1.0, MgfMethod::monte_carlo, s, 0.0};
  if (spec.rank == 0) return out;

  std::gamma_distribution<double> gamma(static_cast<double>(N), 1.0);
  std::exponential_distribution<double> expo(1.0);
  ComplexGaussian cn(1.0);
  double lmax = 0.0;
  for (double l : spec.lambdas) lmax = std::max(lmax, l);
  const double lo = 1e-4 * std::min(1.0, 1.0 / (-s * lmax));
  const double hi = 2.0;
  DefensiveMix mix{lo, hi, std::log(hi / lo)};

  double mean = 0.0, m2 = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    double v;
    if (scheme == McSampling::plain) {
      const double a = gamma(rng);
      double b = 0.0;
      for (double l : spec.lambdas) b += l * std::norm(cn(rng));
      v = std::exp(s * a * b);
    } else {
      double a;
      double w = mix.draw(gamma, rng, static_cast<double>(N), a);
      double b = 0.0;
      for (double l : spec.lambdas) {
        double e;
        w *= mix.draw(expo, rng, 1.0, e);
        b += l * e;
      }
      v = w * std::exp(s * a * b);
    }
    const double delta = v - mean;
    mean += delta / static_cast<double>(k + 1);
    m2 += delta * (v - mean);
  }
  out.value = mean;
  out.std_error = std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples));
  return out;
}

double log_eig_partial_fraction_sum(const Spectrum& spec, int N) {
  double sum = 0.0;
  const auto& l = spec.lambdas;
  for (std::size_t j = 0; j < l.size(); ++j) {
    double prod = 1.0;
    for (std::size_t i = 0; i < l.size(); ++i)
      if (i != j) prod *= l[j] / (l[j] - l[i]);
    sum += std::log(l[j]) / std::pow(l[j], N) * prod;
  }
  return sum;
}

MgfValue mgf_asymptotic(const Spectrum& spec, int N, double s) {
  check_args(N, s);
  const int M = spec.antennas();
  if (M < 1) throw std::domain_error("mgf_asymptotic: empty spectrum");
  if (spec.rank < M) throw std::domain_error("mgf_asymptotic: zero eigenvalue; use mgf_exact");
  if (N <= M && !eigenvalues_distinct(spec))
    throw std::domain_error("mgf_asymptotic: repeated eigenvalues; use mgf_exact");

  const double abs_s = -s;
  const double gamma_n = std::tgamma(static_cast<double>(N));
  MgfValue out{0.0, MgfMethod::asymptotic, s, 0.0};
  if (N > M) {
    out.value = std::tgamma(static_cast<double>(N - M)) / (gamma_n * spec.product()) * std::pow(abs_s, -M);
  } else if (N == M) {
    if (abs_s <= 1.0) throw std::domain_error("mgf_asymptotic: N = M form needs |s| > 1");
    out.value = std::log(abs_s) / (gamma_n * spec.product()) * std::pow(abs_s, -N);
  } else {
    out.value = std::abs(log_eig_partial_fraction_sum(spec, N)) / gamma_n * std::pow(abs_s, -N);
  }
  return out;
}

}  // namespace sttcaf
