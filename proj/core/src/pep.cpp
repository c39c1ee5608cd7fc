// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include "sttcaf/pep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

#include "sttcaf/mgf.hpp"

namespace sttcaf {

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

PepEstimate pep(const Spectrum& spec, int N, double es_n0) {
  if (!(es_n0 > 0.0)) throw std::invalid_argument("pep: es_n0 must be positive");
  PepEstimate out;
  out.es_n0 = es_n0;
  out.chernoff = mgf_exact(spec, N, -es_n0 / 4.0).value;
  auto integrand = [&](double phi) {
    const double sn = std::sin(phi);  // Gauss nodes are interior, so sn > 0
    return mgf_exact(spec, N, -es_n0 / (4.0 * sn * sn)).value;
  };
  out.craig = boost::math::quadrature::gauss<double, 64>::integrate(integrand, 0.0, std::numbers::pi / 2) /
              std::numbers::pi;
  return out;
}

double union_bound(std::span<const EventClass> events, int N, double es_n0) {
  double total = 0.0;
  for (const auto& ev : events) total += ev.probability * pep(spectrum_of_gram(ev.gram), N, es_n0).craig;
  return total;
}

double union_bound(const TrellisCode& code, int N, double es_n0, int max_len) {
  const auto events = event_classes(code, max_len);
  return union_bound(events, N, es_n0);
}

}  // namespace sttcaf
