// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include <doctest.h>

#include "oracles.hpp"
#include "sttcaf/viterbi.hpp"

using namespace sttcaf;

namespace {

std::vector<int> random_terminated(const TrellisCode& code, int info_len, Rng& rng) {
  std::vector<int> in;
  int state = 0;
  for (int t = 0; t < info_len; ++t) {
    in.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(code.num_inputs())));
    state = code.branch(state, in.back()).next_state;
  }
  for (int u : code.termination_inputs(state)) in.push_back(u);
  return in;
}

}  // namespace

TEST_SUITE("viterbi") {
  TEST_CASE("matches exhaustive ML on noisy short frames") {
    Rng rng = make_rng(41);
    const auto& code = builtin_code("qpsk4_m2_paper");
    for (NoiseModel model : {NoiseModel::exact_whitened, NoiseModel::paper_white}) {
      int agree = 0;
      for (int f = 0; f < 200; ++f) {
        const auto link = link_for_snr(2, 2, 4.0 + (f % 5) * 3.0);
        const auto ch = sample_channel(link, rng);
        const auto in = random_terminated(code, 4, rng);
        const CMatrix y = transmit_frame(encode(code, in), ch, link, rng);
        agree += viterbi_decode(code, y, ch, link, model) == oracle::brute_force_ml(code, y, ch, link, model) ? 1 : 0;
      }
      CHECK(agree == 200);
    }
  }

  TEST_CASE("branch costs equal the direct quadratic form") {
    Rng rng = make_rng(42);
    const auto& code = builtin_code("qpsk4_m4_tarokh");
    const auto link = link_for_snr(4, 3, 8.0);
    const auto ch = sample_channel(link, rng);
    const std::vector<int> in{1, 3, 0};
    const CMatrix y = transmit_frame(encode(code, in), ch, link, rng);
    for (NoiseModel model : {NoiseModel::exact_whitened, NoiseModel::paper_white}) {
      const auto costs = branch_costs(code, y, ch, link, model);
      REQUIRE(costs.rows() == 3);
      REQUIRE(costs.cols() == 16);
      for (int t = 0; t < 3; ++t)
        for (int s = 0; s < 4; ++s)
          for (int u = 0; u < 4; ++u)
            CHECK(costs(t, s * 4 + u) ==
                  doctest::Approx(oracle::column_cost(y.col(t), code.symbols(s, u), ch, link, model)).epsilon(1e-9));
    }
  }

  TEST_CASE("constant offsets leave the decision unchanged") {
    Rng rng = make_rng(43);
    const auto& code = builtin_code("qpsk4_m2_tarokh");
    for (int f = 0; f < 50; ++f) {
      const auto link = link_for_snr(2, 1, 6.0);
      const auto ch = sample_channel(link, rng);
      const auto in = random_terminated(code, 12, rng);
      const CMatrix y = transmit_frame(encode(code, in), ch, link, rng);
      Eigen::MatrixXd costs = branch_costs(code, y, ch, link, NoiseModel::exact_whitened);
      const auto base = trellis_search(code, costs);
      for (Eigen::Index t = 0; t < costs.rows(); ++t) costs.row(t).array() += 17.5 * static_cast<double>(t + 1);
      CHECK(trellis_search(code, costs) == base);
    }
  }

  TEST_CASE("noiseless round trip for every built-in and receive count") {
    Rng rng = make_rng(44);
    for (const auto& code : builtin_codes())
      for (int N : {1, 2, 4}) {
        RelayLinkConfig link = link_for_snr(code.antennas(), N, 10.0);
        link.relay_noise_var = 0.0;
        link.dest_noise_var = 0.0;
        for (int f = 0; f < 100; ++f) {
          const auto ch = sample_channel(link, rng);
          const auto in = random_terminated(code, 20, rng);
          const CMatrix y = sttcaf::effective_channel(ch, link).H * encode(code, in);
          CHECK(viterbi_decode(code, y, ch, link, NoiseModel::exact_whitened) == in);
          CHECK(viterbi_decode(code, y, ch, link, NoiseModel::paper_white) == in);
        }
      }
  }

  TEST_CASE("rank-one signal: both metrics pick the same path") {
    Rng rng = make_rng(45);
    const auto& code = builtin_code("qpsk4_m2_paper");
    int same = 0;
    for (int f = 0; f < 200; ++f) {
      const auto link = link_for_snr(2, 3, 5.0);
      const auto ch = sample_channel(link, rng);
      const auto in = random_terminated(code, 30, rng);
      const CMatrix y = transmit_frame(encode(code, in), ch, link, rng);
      same += viterbi_decode(code, y, ch, link, NoiseModel::exact_whitened) ==
                      viterbi_decode(code, y, ch, link, NoiseModel::paper_white)
                  ? 1
                  : 0;
    }
    CHECK(same == 200);
  }

  TEST_CASE("errors") {
    const auto& code = builtin_code("qpsk4_m2_paper");
    Rng rng = make_rng(46);
    const auto link = link_for_snr(2, 2, 10.0);
    const auto ch = sample_channel(link, rng);
    CHECK_THROWS_AS(viterbi_decode(code, CMatrix::Zero(3, 4), ch, link, NoiseModel::exact_whitened),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_noise_model("pink"), std::invalid_argument);
    CHECK(parse_noise_model("white") == NoiseModel::paper_white);
    CHECK(parse_noise_model("exact_whitened") == NoiseModel::exact_whitened);
    Eigen::MatrixXd narrow = Eigen::MatrixXd::Zero(2, 3);
    CHECK_THROWS_AS(trellis_search(code, narrow), std::invalid_argument);
  }
}
