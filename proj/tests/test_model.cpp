// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include <doctest.h>

#include <Eigen/SVD>

#include "sttcaf/model.hpp"

using namespace sttcaf;

namespace {

RelayLinkConfig link(int M, int N, double s1 = 1.0, double s3 = 1.0, double alpha = 1.0) {
  RelayLinkConfig c;
  c.source_antennas = M;
  c.dest_antennas = N;
  c.relay_noise_var = s1;
  c.dest_noise_var = s3;
  c.relay_gain = alpha;
  return c;
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("sampling is deterministic per seed") {
    Rng a = make_rng(5), b = make_rng(5);
    const auto x = sample_channel(link(2, 2), a);
    const auto y = sample_channel(link(2, 2), b);
    CHECK(x.h == y.h);
    CHECK(x.g == y.g);
    CHECK(x.h.size() == 2);
    CHECK(x.g.size() == 2);
  }

  TEST_CASE("fading entries have unit variance") {
    Rng rng = make_rng(6);
    const auto cfg = link(2, 3);
    double h2 = 0.0, g2 = 0.0;
    const int n = 100'000;
    for (int i = 0; i < n; ++i) {
      const auto ch = sample_channel(cfg, rng);
      h2 += std::norm(ch.h(0));
      g2 += ch.g.squaredNorm();
    }
    CHECK(h2 / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(g2 / n == doctest::Approx(3.0).epsilon(0.05 / 3.0));
  }

  TEST_CASE("effective channel by direct substitution") {
    ChannelSample ch;
    ch.h = Eigen::RowVectorXcd::Zero(2);
    ch.h(0) = 1.0;
    ch.g = CVector::Zero(3);
    ch.g(0) = 1.0;
    const auto eff = effective_channel(ch, link(2, 3));
    CMatrix H = CMatrix::Zero(3, 2);
    H(0, 0) = 1.0;
    CHECK((eff.H - H).norm() == 0.0);
    CMatrix C = CMatrix::Identity(3, 3);
    C(0, 0) = 2.0;
    CHECK((eff.noise_cov - C).norm() < 1e-15);
  }

  TEST_CASE("effective channel is rank one with the stated covariance") {
    Rng rng = make_rng(7);
    const auto cfg = link(4, 3, 0.7, 0.3, 1.5);
    for (int rep = 0; rep < 50; ++rep) {
      const auto ch = sample_channel(cfg, rng);
      const auto eff = effective_channel(ch, cfg);
      Eigen::JacobiSVD<CMatrix> svd(eff.H);
      CHECK(svd.singularValues()(1) < 1e-10 * svd.singularValues()(0));
      const double trace = eff.noise_cov.trace().real();
      CHECK(trace == doctest::Approx(1.5 * 1.5 * 0.7 * ch.g.squaredNorm() + 3 * 0.3));
      CHECK((eff.noise_cov - eff.noise_cov.adjoint()).norm() < 1e-14);
    }
  }

  TEST_CASE("generated noise matches the exact covariance") {
    Rng rng = make_rng(8);
    const auto cfg = link(2, 2, 1.0, 0.5, 1.0);
    const auto ch = sample_channel(cfg, rng);
    const auto eff = effective_channel(ch, cfg);
    const CMatrix zero = CMatrix::Zero(2, 1);
    CMatrix acc = CMatrix::Zero(2, 2);
    const int n = 100'000;
    for (int i = 0; i < n; ++i) {
      const CMatrix y = transmit_frame(zero, ch, cfg, rng);
      acc += y * y.adjoint();
    }
    acc /= static_cast<double>(n);
    const double scale = eff.noise_cov.cwiseAbs().maxCoeff();
    CHECK((acc - eff.noise_cov).cwiseAbs().maxCoeff() < 0.03 * scale);
  }

  TEST_CASE("averaged exact covariance approaches the white model") {
    Rng rng = make_rng(9);
    const auto cfg = link(2, 2, 1.0, 1.0, 1.0);
    CMatrix acc = CMatrix::Zero(2, 2);
    const int n = 100'000;
    for (int i = 0; i < n; ++i) acc += effective_channel(sample_channel(cfg, rng), cfg).noise_cov;
    acc /= static_cast<double>(n);
    const CMatrix target = white_noise_approx(cfg) * CMatrix::Identity(2, 2);
    CHECK((acc - target).cwiseAbs().maxCoeff() < 0.03 * 2.0);
  }

  TEST_CASE("white noise approximation") {
    CHECK(white_noise_approx(link(2, 2, 1.0, 1.0)) == 2.0);
    CHECK(white_noise_approx(link(2, 2, 0.0, 0.7)) == 0.7);
    CHECK(white_noise_approx(link(2, 2, 2.0, 0.0)) == 2.0);
  }

  TEST_CASE("noiseless and zero-gain limits") {
    Rng rng = make_rng(10);
    const auto quiet = link(2, 2, 0.0, 0.0, 1.3);
    const auto ch = sample_channel(quiet, rng);
    CMatrix s(2, 3);
    s << 1.0, Complex(0, 1), -1.0, Complex(0, -1), 1.0, 1.0;
    const CMatrix y = transmit_frame(s, ch, quiet, rng);
    CHECK((y - 1.3 * ch.g * (ch.h * s)).norm() < 1e-14);

    const auto dead = link(2, 2, 1.0, 1.0, 0.0);
    Rng r1 = make_rng(3), r2 = make_rng(3);
    const CMatrix y0 = transmit_frame(s, ch, dead, r1);
    const CMatrix y1 = transmit_frame(CMatrix::Zero(2, 3), ch, dead, r2);
    CHECK((y0 - y1).norm() == 0.0);
  }

  TEST_CASE("received mean equals the noiseless signal") {
    Rng rng = make_rng(13);
    const auto cfg = link(2, 2, 0.5, 0.5);
    const auto ch = sample_channel(cfg, rng);
    CMatrix s(2, 1);
    s << 1.0, Complex(0, 1);
    CMatrix mean = CMatrix::Zero(2, 1);
    const int n = 100'000;
    for (int i = 0; i < n; ++i) mean += transmit_frame(s, ch, cfg, rng);
    mean /= static_cast<double>(n);
    const CMatrix expect = ch.g * (ch.h * s);
    const double se = std::sqrt(effective_channel(ch, cfg).noise_cov.trace().real() / n);
    CHECK((mean - expect).norm() < 5.0 * se);
  }

  TEST_CASE("SNR mapping") {
    const auto cfg = link_for_snr(2, 2, 10.0);
    const double n0 = 2.0 / 10.0;
    CHECK(cfg.relay_noise_var == doctest::Approx(n0 / 2.0));
    CHECK(cfg.dest_noise_var == doctest::Approx(n0 / 2.0));
    CHECK(white_noise_approx(cfg) == doctest::Approx(n0));
    CHECK(symbol_snr(10.0, 2) == doctest::Approx(5.0));
    const auto amp = link_for_snr(4, 1, 20.0, 2.0);
    CHECK(white_noise_approx(amp) == doctest::Approx(4.0 / 100.0));
  }

  TEST_CASE("config validation") {
    CHECK_THROWS_AS(link(0, 1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(link(1, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(link(1, 1, -1.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(link(1, 1, 1.0, 1.0, -0.5).validate(), std::invalid_argument);
    CHECK_NOTHROW(link(1, 1, 0.0, 0.0, 0.0).validate());
    Rng rng = make_rng(1);
    const auto ch = sample_channel(link(2, 2), rng);
    CHECK_THROWS_AS(transmit_frame(CMatrix::Zero(3, 1), ch, link(2, 2), rng), std::invalid_argument);
  }
}
