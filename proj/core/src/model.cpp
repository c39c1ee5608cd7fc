// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include "sttcaf/model.hpp"

#include <cmath>
#include <stdexcept>

namespace sttcaf {

void RelayLinkConfig::validate() const {
  if (source_antennas < 1) throw std::invalid_argument("RelayLinkConfig: M must be >= 1");
  if (dest_antennas < 1) throw std::invalid_argument("RelayLinkConfig: N must be >= 1");
  if (!(relay_noise_var >= 0.0) || !(dest_noise_var >= 0.0))
    throw std::invalid_argument("RelayLinkConfig: noise variances must be >= 0");
  if (!(relay_gain >= 0.0)) throw std::invalid_argument("RelayLinkConfig: relay gain must be >= 0");
  if (!std::isfinite(es_n0_db)) throw std::invalid_argument("RelayLinkConfig: es_n0_db must be finite");
}

ChannelSample sample_channel(const RelayLinkConfig& cfg, Rng& rng) {
  cfg.validate();
  ComplexGaussian cn(1.0);
  ChannelSample ch;
  ch.h.resize(cfg.source_antennas);
  ch.g.resize(cfg.dest_antennas);
  for (Eigen::Index i = 0; i < ch.h.size(); ++i) ch.h(i) = cn(rng);
  for (Eigen::Index i = 0; i < ch.g.size(); ++i) ch.g(i) = cn(rng);
  return ch;
}

EffectiveChannel effective_channel(const ChannelSample& ch, const RelayLinkConfig& cfg) {
  if (ch.h.size() != cfg.source_antennas || ch.g.size() != cfg.dest_antennas)
    throw std::invalid_argument("effective_channel: channel dimensions do not match config");
  const double a = cfg.relay_gain;
  EffectiveChannel eff;
  eff.H = a * ch.g * ch.h;
  eff.noise_cov = (a * a * cfg.relay_noise_var) * (ch.g * ch.g.adjoint());
  eff.noise_cov.diagonal().array() += cfg.dest_noise_var;
  return eff;
}

double white_noise_approx(const RelayLinkConfig& cfg) {
  constexpr double kSigmaG2 = 1.0;
  return cfg.relay_gain * cfg.relay_gain * cfg.relay_noise_var * kSigmaG2 + cfg.dest_noise_var;
}

CMatrix transmit_frame(const CMatrix& codeword, const ChannelSample& ch,
                       const RelayLinkConfig& cfg, Rng& rng) {
  if (codeword.rows() != cfg.source_antennas || ch.h.size() != cfg.source_antennas ||
      ch.g.size() != cfg.dest_antennas)
    throw std::invalid_argument("transmit_frame: dimension mismatch");
  ComplexGaussian relay_noise(cfg.relay_noise_var);
  ComplexGaussian dest_noise(cfg.dest_noise_var);
  const Eigen::Index n = cfg.dest_antennas;

  CMatrix y(n, codeword.cols());
  for (Eigen::Index t = 0; t < codeword.cols(); ++t) {
    const Complex x = (ch.h * codeword.col(t))(0) + relay_noise(rng);
    for (Eigen::Index r = 0; r < n; ++r) y(r, t) = cfg.relay_gain * ch.g(r) * x + dest_noise(rng);
  }
  return y;
}

RelayLinkConfig link_for_snr(int source_antennas, int dest_antennas, double snr_db,
                             double relay_gain) {
  RelayLinkConfig cfg;
  cfg.source_antennas = source_antennas;
  cfg.dest_antennas = dest_antennas;
  cfg.relay_gain = relay_gain;
  cfg.es_n0_db = snr_db;
  const double n0 = source_antennas / std::pow(10.0, snr_db / 10.0);
  const double var = n0 / (1.0 + relay_gain * relay_gain);
  cfg.relay_noise_var = var;
  cfg.dest_noise_var = var;
  cfg.validate();
  return cfg;
}

double symbol_snr(double snr_db, int source_antennas) {
  return std::pow(10.0, snr_db / 10.0) / source_antennas;
}

}  // namespace sttcaf
