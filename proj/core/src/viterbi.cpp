// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include "sttcaf/viterbi.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace sttcaf {

std::string_view to_string(NoiseModel m) {
  return m == NoiseModel::exact_whitened ? "exact_whitened" : "paper_white";
}

NoiseModel parse_noise_model(std::string_view name) {
  if (name == "exact_whitened" || name == "exact") return NoiseModel::exact_whitened;
  if (name == "paper_white" || name == "white") return NoiseModel::paper_white;
  throw std::invalid_argument("unknown noise model '" + std::string(name) + "'");
}

Eigen::MatrixXd branch_costs(const TrellisCode& code, const CMatrix& received, const ChannelSample& ch,
                             const RelayLinkConfig& link, NoiseModel model) {
  if (received.rows() != link.dest_antennas || ch.g.size() != link.dest_antennas ||
      ch.h.size() != code.antennas() || link.source_antennas != code.antennas())
    throw std::invalid_argument("viterbi: dimension mismatch between code, channel and received frame");

  const int nb = code.num_states() * code.num_inputs();
  const CMatrix H = effective_channel(ch, link).H;
  CMatrix predicted(received.rows(), nb);
  for (int s = 0; s < code.num_states(); ++s)
    for (int u = 0; u < code.num_inputs(); ++u) predicted.col(s * code.num_inputs() + u) = H * code.symbols(s, u);

  const double beta = link.relay_gain * link.relay_gain * link.relay_noise_var;
  const double dest = link.dest_noise_var;
  const double g2 = ch.g.squaredNorm();
  double white = white_noise_approx(link);
  if (white <= 0.0) white = 1.0;

  Eigen::MatrixXd costs(received.cols(), nb);
  for (Eigen::Index t = 0; t < received.cols(); ++t) {
    for (int b = 0; b < nb; ++b) {
      const CVector r = received.col(t) - predicted.col(b);
      const double total = r.squaredNorm();
      double cost = 0.0;
      if (model == NoiseModel::paper_white) {
        cost = total / white;
      } else if (g2 == 0.0) {
        cost = dest > 0.0 ? total / dest : total;
      } else {
        // C = dest I + beta g g^H: the g-direction has variance beta |g|^2 + dest,
        // its complement variance dest.
        const double parallel = std::norm(ch.g.dot(r)) / g2;
        const double along = beta * g2 + dest;
        if (dest > 0.0) {
          cost = (total - parallel) / dest + parallel / along;
        } else {
          // The complement carries no signal and no noise; it is the same for every branch.
          cost = along > 0.0 ? parallel / along : parallel;
        }
      }
      costs(t, b) = cost;
    }
  }
  return costs;
}

std::vector<int> trellis_search(const TrellisCode& code, const Eigen::MatrixXd& costs, int start_state,
                                int end_state) {
  const int S = code.num_states(), K = code.num_inputs();
  if (costs.cols() != S * K) throw std::invalid_argument("trellis_search: cost table has wrong width");
  if (start_state < 0 || start_state >= S || end_state < 0 || end_state >= S)
    throw std::out_of_range("trellis_search: state out of range");
  const Eigen::Index L = costs.rows();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  std::vector<double> metric(static_cast<std::size_t>(S), kInf), next(static_cast<std::size_t>(S));
  metric[static_cast<std::size_t>(start_state)] = 0.0;
  // Survivor branch index (state * K + input) into each state at each step.
  std::vector<int> survivor(static_cast<std::size_t>(L * S), -1);

  for (Eigen::Index t = 0; t < L; ++t) {
    std::fill(next.begin(), next.end(), kInf);
    for (int s = 0; s < S; ++s) {
      const double m = metric[static_cast<std::size_t>(s)];
      if (m == kInf) continue;
      for (int u = 0; u < K; ++u) {
        const int ns = code.branch(s, u).next_state;
        const double cand = m + costs(t, s * K + u);
        if (cand < next[static_cast<std::size_t>(ns)]) {
          next[static_cast<std::size_t>(ns)] = cand;
          survivor[static_cast<std::size_t>(t * S + ns)] = s * K + u;
        }
      }
    }
    metric.swap(next);
  }
  if (metric[static_cast<std::size_t>(end_state)] == kInf)
    throw std::domain_error("trellis_search: end state unreachable");

  std::vector<int> inputs(static_cast<std::size_t>(L));
  int state = end_state;
  for (Eigen::Index t = L - 1; t >= 0; --t) {
    const int b = survivor[static_cast<std::size_t>(t * S + state)];
    inputs[static_cast<std::size_t>(t)] = b % K;
    state = b / K;
  }
  return inputs;
}

std::vector<int> viterbi_decode(const TrellisCode& code, const CMatrix& received, const ChannelSample& ch,
                                const RelayLinkConfig& link, NoiseModel model) {
  return trellis_search(code, branch_costs(code, received, ch, link, model), 0, 0);
}

}  // namespace sttcaf
