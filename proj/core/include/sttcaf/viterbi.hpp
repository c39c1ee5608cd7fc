// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include <string_view>
#include <vector>

#include "sttcaf/model.hpp"
#include "sttcaf/trellis.hpp"

namespace sttcaf {

/// Noise statistics assumed by the decoder metric.
enum class NoiseModel {
  exact_whitened,  // (y - Hs)^H C^-1 (y - Hs) with the exact conditional covariance
  paper_white,     // ||y - Hs||^2 / sigma_w^2 with sigma_w^2 from white_noise_approx
};

std::string_view to_string(NoiseModel m);
/// Throws std::invalid_argument for an unknown name.
NoiseModel parse_noise_model(std::string_view name);

/// Branch costs, one row per received column and one column per
/// (state * num_inputs + input). Lower is more likely.
Eigen::MatrixXd branch_costs(const TrellisCode& code, const CMatrix& received, const ChannelSample& ch,
                             const RelayLinkConfig& link, NoiseModel model);

/// Minimum-cost input sequence from start_state to end_state. Throws
/// std::domain_error when end_state is unreachable in costs.rows() steps.
std::vector<int> trellis_search(const TrellisCode& code, const Eigen::MatrixXd& costs, int start_state = 0,
                                int end_state = 0);

/// Maximum-likelihood sequence detection with genie CSI, trellis started and
/// terminated in state 0. Returns one input per received column (tail
/// included).
std::vector<int> viterbi_decode(const TrellisCode& code, const CMatrix& received, const ChannelSample& ch,
                                const RelayLinkConfig& link, NoiseModel model);

}  // namespace sttcaf
