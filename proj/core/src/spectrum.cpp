// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include "sttcaf/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace sttcaf {

double Spectrum::trace() const noexcept {
  double s = 0.0;
  for (double l : lambdas) s += l;
  return s;
}

double Spectrum::product() const noexcept {
  double p = 1.0;
  for (double l : lambdas) p *= l;
  return p;
}

Spectrum make_spectrum(std::vector<double> lambdas) {
  Spectrum spec;
  double lmax = 0.0;
  for (double l : lambdas) {
    if (!std::isfinite(l)) throw std::invalid_argument("make_spectrum: non-finite eigenvalue");
    lmax = std::max(lmax, std::abs(l));
  }
  const double tol = kRankTolerance * lmax;
  for (double& l : lambdas) {
    if (l < -1e-8 * std::max(lmax, 1.0)) throw std::invalid_argument("make_spectrum: negative eigenvalue");
    if (l <= tol) l = 0.0;
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  spec.rank = static_cast<int>(std::count_if(lambdas.begin(), lambdas.end(), [](double l) { return l > 0.0; }));
  spec.lambdas = std::move(lambdas);
  return spec;
}

Spectrum spectrum_of_gram(const CMatrix& gram) {
  const HermitianEigen eig = jacobi_eigen(gram);
  std::vector<double> values(static_cast<std::size_t>(eig.values.size()));
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) values[static_cast<std::size_t>(i)] = eig.values(i);
  return make_spectrum(std::move(values));
}

Spectrum spectrum(const CMatrix& omega) { return spectrum_of_gram(omega * omega.adjoint()); }

Spectrum spectrum(const DifferenceMatrix& event) { return spectrum(event.omega); }

Spectrum nonzero_part(const Spectrum& spec) {
  std::vector<double> nz(spec.lambdas.begin(), spec.lambdas.begin() + spec.rank);
  return make_spectrum(std::move(nz));
}

bool eigenvalues_distinct(const Spectrum& spec, double rel_gap) {
  // Sorted descending, so only neighbours need checking.
  for (std::size_t i = 1; i < spec.lambdas.size(); ++i) {
    const double a = spec.lambdas[i - 1], b = spec.lambdas[i];
    if (a - b <= rel_gap * std::max(a, b)) return false;
  }
  return true;
}

}  // namespace sttcaf
