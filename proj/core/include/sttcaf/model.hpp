// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include "sttcaf/linalg.hpp"
#include "sttcaf/random.hpp"

namespace sttcaf {

/// Two-hop amplify-and-forward link: M-antenna source, single-antenna relay,
/// N-antenna destination. Noise variances are per complex sample.
struct RelayLinkConfig {
  int source_antennas = 2;     // M
  int dest_antennas = 2;       // N
  double relay_noise_var = 1;  // sigma_1^2
  double dest_noise_var = 1;   // sigma_3^2
  double relay_gain = 1;       // alpha; no power renormalization at the relay
  double es_n0_db = 10;

  /// Throws std::invalid_argument on M, N < 1 or negative variances/gain.
  /// Zero variances and zero gain are accepted as limiting cases.
  void validate() const;
};

/// One quasi-static fading realization: h is 1 x M, g is N x 1.
struct ChannelSample {
  Eigen::RowVectorXcd h;
  CVector g;
};

struct EffectiveChannel {
  CMatrix H;          // N x M, equals alpha * g * h
  CMatrix noise_cov;  // N x N, alpha^2 sigma_1^2 g g^H + sigma_3^2 I
};

/// Draws i.i.d. unit-variance Rayleigh entries for h and g.
ChannelSample sample_channel(const RelayLinkConfig& cfg, Rng& rng);

/// Exact conditional statistics of y = alpha*g*(h s + n1) + n2 given g.
EffectiveChannel effective_channel(const ChannelSample& ch, const RelayLinkConfig& cfg);

/// White-noise variance alpha^2 sigma_1^2 sigma_g^2 + sigma_3^2 with the
/// per-antenna relay->destination gain sigma_g^2 = 1. Only used as a decoder
/// metric option; the simulated channel always carries the exact noise.
double white_noise_approx(const RelayLinkConfig& cfg);

/// Passes an M x L codeword through the link. Each column gets fresh relay
/// and destination noise, so the N received samples of one column share the
/// relay noise term.
CMatrix transmit_frame(const CMatrix& codeword, const ChannelSample& ch,
                       const RelayLinkConfig& cfg, Rng& rng);

/// Link whose destination E_s/N_0 equals snr_db with total transmit energy
/// M per channel use and N_0 = alpha^2 sigma_1^2 + sigma_3^2 split so that
/// sigma_1^2 = sigma_3^2.
RelayLinkConfig link_for_snr(int source_antennas, int dest_antennas, double snr_db,
                             double relay_gain = 1.0);

/// Per-symbol E_s/N_0 (linear) implied by link_for_snr at snr_db; the value
/// to pass to the pairwise-error routines, which use unit-energy symbols.
double symbol_snr(double snr_db, int source_antennas);

}  // namespace sttcaf
