// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sttcaf/model.hpp"
#include "sttcaf/trellis.hpp"
#include "sttcaf/viterbi.hpp"

namespace sttcaf {

struct SimConfig {
  TrellisCode code = builtin_code("qpsk4_m2_tarokh");
  RelayLinkConfig link;  // antenna counts and relay gain; variances are set per SNR
  int frame_len = 100;
  std::vector<double> snr_grid_db;
  std::uint64_t max_frames = 100'000;
  std::uint64_t target_frame_errors = 100;
  NoiseModel decoder_noise_model = NoiseModel::exact_whitened;
  std::uint64_t seed = 1;
  bool noiseless = false;
  unsigned threads = 0;  // 0: default_thread_count()

  /// Throws std::invalid_argument on frame_len < 10, a non-increasing grid,
  /// target_frame_errors < 50, max_frames == 0, an alphabet that is not a
  /// power of two, or link antenna counts that disagree with the code.
  void validate() const;
};

struct BerPoint {
  double snr_db = 0.0;
  std::uint64_t frames = 0;
  std::uint64_t bit_errors = 0;
  std::uint64_t frame_errors = 0;
  std::uint64_t bits_per_frame = 0;
  double ber = 0.0;
  double fer = 0.0;
  double ci95_ber = 0.0;  // normal approximation; 3/n one-sided when no errors

  double ci95_fer() const;
};

struct SlopeFit {
  double slope = 0.0;  // d in BER ~ SNR^-d
  std::pair<double, double> fit_range_db{0.0, 0.0};
  double residual = 0.0;  // RMS of the log10 residuals
  int points = 0;
};

struct SimResult {
  std::vector<BerPoint> points;
  std::optional<SlopeFit> slope;
  std::string slope_note;  // reason when slope is unavailable
};

/// Simulates frames at one SNR until max_frames or target_frame_errors.
/// Frame f uses its own stream derive_seed(seed, snr stream, f); frames run
/// in parallel batches and the stopping point is the first frame index at
/// which the error target is met, so results do not depend on the thread
/// count.
BerPoint run_point(const SimConfig& cfg, double snr_db);

/// run_point over the grid plus a slope fit on the highest-SNR half (at
/// least 3) of the nonzero-BER points. Throws std::invalid_argument when the
/// grid has fewer than 4 points or spans less than 12 dB.
SimResult sweep(const SimConfig& cfg);

/// Least-squares slope of -log10(ber) against snr_db/10. Throws
/// std::domain_error for fewer than 3 points with ber > 0.
SlopeFit fit_diversity(std::span<const BerPoint> points);

/// Sweep CSV: snr_db,frames,bit_errors,ber,ci95_ber,frame_errors,fer and a
/// trailing "# slope=..." comment line.
std::string sweep_csv(const SimResult& result);

}  // namespace sttcaf
