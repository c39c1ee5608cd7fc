// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include <span>

#include "sttcaf/events.hpp"
#include "sttcaf/spectrum.hpp"
#include "sttcaf/trellis.hpp"

namespace sttcaf {

struct PepEstimate {
  double craig = 0.5;     // exact average PEP via Craig's form of Q
  double chernoff = 1.0;  // MGF at s = -E_s / (4 N_0)
  double es_n0 = 0.0;
};

/// Channel-averaged pairwise error probability for per-symbol SNR es_n0
/// (linear). The Craig integral uses 64-point Gauss-Legendre in phi, each
/// node an exact MGF evaluation. Throws std::invalid_argument if es_n0 <= 0.
PepEstimate pep(const Spectrum& spec, int N, double es_n0);

/// Union bound on the probability that an error event starts at a given
/// trellis position, summing Craig PEPs of all events up to max_len weighted
/// by their probability under equiprobable inputs.
double union_bound(const TrellisCode& code, int N, double es_n0, int max_len);
double union_bound(std::span<const EventClass> events, int N, double es_n0);

/// Frame error bound: a frame errs only if an event starts at one of its
/// frame_len data positions.
inline double frame_union_bound(double per_start_bound, int frame_len) {
  return per_start_bound * frame_len;
}

/// Gaussian tail Q(x).
double q_function(double x);

}  // namespace sttcaf
