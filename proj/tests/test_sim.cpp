// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sttcaf/sim.hpp"

using namespace sttcaf;

namespace {

SimConfig config(const std::string& code, int N) {
  SimConfig cfg;
  cfg.code = builtin_code(code);
  cfg.link.source_antennas = cfg.code.antennas();
  cfg.link.dest_antennas = N;
  cfg.frame_len = 50;
  cfg.max_frames = 4000;
  cfg.target_frame_errors = 50;
  cfg.seed = 77;
  return cfg;
}

std::vector<BerPoint> synthetic(double slope, double c, double jitter, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> j(1.0 - jitter, 1.0 + jitter);
  std::vector<BerPoint> pts;
  for (double snr = 0.0; snr <= 30.0; snr += 3.0) {
    BerPoint p;
    p.snr_db = snr;
    p.ber = c * std::pow(10.0, -slope * snr / 10.0) * (jitter > 0.0 ? j(rng) : 1.0);
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

TEST_SUITE("sim") {
  TEST_CASE("slope fit on constructed lines") {
    CHECK(fit_diversity(synthetic(1.0, 1.0, 0.0, 0)).slope == doctest::Approx(1.0).epsilon(1e-12));
    const auto two = fit_diversity(synthetic(2.0, 0.37, 0.0, 0));
    CHECK(two.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(two.residual < 1e-12);
    CHECK(two.fit_range_db.first == 0.0);
    CHECK(two.fit_range_db.second == 30.0);
    for (std::uint64_t s = 0; s < 20; ++s)
      CHECK(std::abs(fit_diversity(synthetic(1.5, 0.2, 0.1, s)).slope - 1.5) <= 0.15);
    auto few = synthetic(1.0, 1.0, 0.0, 0);
    for (std::size_t i = 2; i < few.size(); ++i) few[i].ber = 0.0;
    CHECK_THROWS_AS(fit_diversity(few), std::domain_error);
  }

  TEST_CASE("noiseless frames are error free") {
    auto cfg = config("qpsk4_m2_paper", 2);
    cfg.noiseless = true;
    cfg.max_frames = 300;
    const auto p = run_point(cfg, 5.0);
    CHECK(p.frames == 300);
    CHECK(p.ber == 0.0);
    CHECK(p.bit_errors == 0);
    CHECK(p.ci95_ber == doctest::Approx(3.0 / (300.0 * 100.0)));
  }

  TEST_CASE("point bookkeeping") {
    const auto cfg = config("qpsk4_m2_tarokh", 1);
    const auto p = run_point(cfg, 6.0);
    CHECK(p.bits_per_frame == 100);
    CHECK(p.frame_errors == 50);
    CHECK(p.ber == doctest::Approx(static_cast<double>(p.bit_errors) / (p.frames * 100.0)));
    CHECK(p.fer == doctest::Approx(static_cast<double>(p.frame_errors) / p.frames));
    CHECK(p.ci95_ber == doctest::Approx(1.96 * std::sqrt(p.ber * (1 - p.ber) / (p.frames * 100.0))));
    CHECK(p.ber <= 1.0);
  }

  TEST_CASE("results do not depend on the thread count") {
    auto cfg = config("qpsk4_m2_paper", 1);
    cfg.threads = 1;
    const auto a = run_point(cfg, 9.0);
    cfg.threads = 3;
    const auto b = run_point(cfg, 9.0);
    CHECK(a.frames == b.frames);
    CHECK(a.bit_errors == b.bit_errors);
    CHECK(a.frame_errors == b.frame_errors);
  }

  TEST_CASE("BER does not increase with SNR") {
    auto cfg = config("qpsk4_m2_paper", 2);
    cfg.snr_grid_db = {0.0, 4.0, 8.0, 12.0};
    const auto r = sweep(cfg);
    for (std::size_t i = 1; i < r.points.size(); ++i)
      CHECK(r.points[i].ber <= r.points[i - 1].ber + 2.0 * (r.points[i].ci95_ber + r.points[i - 1].ci95_ber));
  }

  TEST_CASE("whitened decoder is no worse than the white one") {
    auto cfg = config("qpsk4_m2_paper", 2);
    cfg.max_frames = 2000;
    cfg.target_frame_errors = 100'000;
    const auto exact = run_point(cfg, 10.0);
    cfg.decoder_noise_model = NoiseModel::paper_white;
    const auto white = run_point(cfg, 10.0);
    CHECK(exact.ber <= white.ber + exact.ci95_ber);
  }

  TEST_CASE("sweep CSV layout") {
    auto cfg = config("qpsk4_m2_paper", 1);
    cfg.snr_grid_db = {0.0, 4.0, 8.0, 12.0};
    const auto r = sweep(cfg);
    const auto csv = sweep_csv(r);
    CHECK(csv.rfind("snr_db,frames,bit_errors,ber,ci95_ber,frame_errors,fer\n", 0) == 0);
    REQUIRE(r.slope.has_value());
    CHECK(csv.find("\n# slope=") != std::string::npos);
    CHECK(csv.find("dB residual=") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  }

  TEST_CASE("slope reported unavailable without enough errors") {
    auto cfg = config("qpsk4_m2_paper", 2);
    cfg.noiseless = true;
    cfg.max_frames = 100;
    cfg.snr_grid_db = {0.0, 4.0, 8.0, 12.0};
    const auto r = sweep(cfg);
    CHECK(!r.slope.has_value());
    CHECK(sweep_csv(r).find("# slope=unavailable") != std::string::npos);
  }

  TEST_CASE("configuration checks") {
    auto cfg = config("qpsk4_m2_paper", 2);
    cfg.frame_len = 9;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = config("qpsk4_m2_paper", 2);
    cfg.target_frame_errors = 49;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = config("qpsk4_m2_paper", 2);
    cfg.snr_grid_db = {0.0, 4.0, 4.0, 12.0};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.snr_grid_db = {0.0, 4.0, 8.0};
    CHECK_THROWS_AS(sweep(cfg), std::invalid_argument);
    cfg.snr_grid_db = {0.0, 3.0, 6.0, 9.0};
    CHECK_THROWS_AS(sweep(cfg), std::invalid_argument);
    cfg = config("qpsk4_m2_paper", 2);
    cfg.link.source_antennas = 4;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  }
}
