// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include <vector>

#include "sttcaf/events.hpp"
#include "sttcaf/linalg.hpp"

namespace sttcaf {

/// Eigenvalues of Omega Omega^H, sorted descending. Entries below
/// 1e-10 * lambda_max are clamped to zero and do not count toward rank.
struct Spectrum {
  std::vector<double> lambdas;
  int rank = 0;

  int antennas() const noexcept { return static_cast<int>(lambdas.size()); }
  double trace() const noexcept;
  double product() const noexcept;
};

inline constexpr double kRankTolerance = 1e-10;

/// Builds a Spectrum from raw eigenvalues (any order; tiny negatives from
/// roundoff are clamped). Throws std::invalid_argument on clearly negative
/// or non-finite input.
Spectrum make_spectrum(std::vector<double> lambdas);

Spectrum spectrum(const DifferenceMatrix& event);
Spectrum spectrum(const CMatrix& omega);
Spectrum spectrum_of_gram(const CMatrix& gram);

/// The nonzero eigenvalues only, as a smaller spectrum.
Spectrum nonzero_part(const Spectrum& spec);

/// True when every pair of eigenvalues differs by more than rel_gap times the
/// larger of the two.
bool eigenvalues_distinct(const Spectrum& spec, double rel_gap = 1e-6);

}  // namespace sttcaf
