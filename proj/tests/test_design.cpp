// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include <doctest.h>

#include <cmath>

#include "sttcaf/design.hpp"
#include "sttcaf/events.hpp"
#include "sttcaf/mgf.hpp"
#include "sttcaf/spectrum.hpp"

using namespace sttcaf;

TEST_SUITE("design") {
  TEST_CASE("determinant metric") {
    CHECK(metric_determinant(make_spectrum({2.0, 2.0})) == doctest::Approx(4.0));
    CHECK(metric_determinant(make_spectrum({4.0, 2.0})) == doctest::Approx(8.0));
    CHECK_THROWS_AS(metric_determinant(make_spectrum({1.0, 0.0})), std::domain_error);
  }

  TEST_CASE("log-eigenvalue metric") {
    CHECK(metric_log_eig(make_spectrum({1.0, 2.0}), 1) == doctest::Approx(std::log(2.0)));
    CHECK_THROWS_AS(metric_log_eig(make_spectrum({2.0, 2.0}), 1), std::domain_error);
    CHECK_THROWS_AS(metric_log_eig(make_spectrum({2.0, 0.0}), 1), std::domain_error);
    CHECK(metric_log_eig(make_spectrum({4.0, 1.0, 2.0}), 2) ==
          doctest::Approx(metric_log_eig(make_spectrum({2.0, 4.0, 1.0}), 2)).epsilon(1e-14));
    // coefficient of the |s|^-N term, read off the exact mgf
    const Spectrum sp = make_spectrum({1.0, 2.0, 4.0});
    const double coeff = 1e8 * mgf_exact(sp, 1, -1e8).value;
    CHECK(metric_log_eig(sp, 1) == doctest::Approx(coeff).epsilon(0.05));
    const Spectrum sp2 = make_spectrum({0.5, 2.0, 5.0, 3.0});
    const double coeff2 = std::tgamma(2.0) * 1e16 * mgf_exact(sp2, 2, -1e8).value;
    CHECK(std::abs(metric_log_eig(sp2, 2)) == doctest::Approx(coeff2).epsilon(0.05));
  }

  TEST_CASE("fallback metric agrees with the closed form away from degeneracy") {
    const Spectrum sp = make_spectrum({1.0, 2.0, 4.0});
    CHECK(metric_log_eig_fallback(sp, 1) == doctest::Approx(metric_log_eig(sp, 1)).epsilon(0.01));
    const double rep = metric_log_eig_fallback(make_spectrum({2.0, 2.0}), 1);
    const double near = metric_log_eig(make_spectrum({2.0, 2.0 * (1.0 + 1e-3)}), 1);
    CHECK(rep == doctest::Approx(near).epsilon(0.01));
  }

  TEST_CASE("criterion dispatch") {
    CHECK(criterion_for(2, 2) == Criterion::determinant);
    CHECK(criterion_for(2, 4) == Criterion::determinant);
    CHECK(criterion_for(2, 1) == Criterion::log_eig);
    CHECK(criterion_for(4, 2) == Criterion::log_eig);
    for (const auto& c : builtin_codes())
      for (int N : {1, 2, 4}) {
        const auto s = score_code(c, N, c.antennas() == 2 ? 4 : 3);
        CHECK(s.criterion == criterion_for(c.antennas(), N));
        CHECK(s.min_rank <= c.antennas());
        CHECK(std::isfinite(s.worst_metric));
      }
  }

  TEST_CASE("tarokh code is full rank at length six") {
    const auto s = score_code(builtin_code("qpsk4_m2_tarokh"), 2, 6);
    CHECK(s.min_rank == 2);
    CHECK(s.full_diversity);
    CHECK(s.worst_metric == doctest::Approx(4.0));
  }

  TEST_CASE("min rank and worst metric match per-event oracles") {
    for (const auto& c : builtin_codes()) {
      const int L = c.antennas() == 2 ? 5 : 3;
      int min_rank = c.antennas();
      double worst_det = 1e300;
      for (const auto& ev : enumerate_error_events(c, L)) {
        const Spectrum sp = spectrum(ev);
        min_rank = std::min(min_rank, sp.rank);
        if (sp.rank == c.antennas()) worst_det = std::min(worst_det, sp.product());
      }
      const auto det = score_code(c, c.antennas(), L);
      CHECK(det.min_rank == min_rank);
      if (min_rank == c.antennas()) CHECK(det.worst_metric == doctest::Approx(worst_det));
    }
  }

  TEST_CASE("paper code beats tarokh under both criteria") {
    const auto& paper = builtin_code("qpsk4_m2_paper");
    const auto& tarokh = builtin_code("qpsk4_m2_tarokh");
    CHECK(compare_scores(score_code(paper, 1, 8), score_code(tarokh, 1, 8)) <= 0);
    CHECK(compare_scores(score_code(paper, 2, 8), score_code(tarokh, 2, 8)) < 0);
  }

  TEST_CASE("common constellation scaling keeps the winner") {
    const auto& paper = builtin_code("qpsk4_m2_paper");
    const auto& tarokh = builtin_code("qpsk4_m2_tarokh");
    for (double k : {0.5, 3.0}) {
      for (int N : {1, 2}) {
        const int base = compare_scores(score_code(paper, N, 5), score_code(tarokh, N, 5));
        const int scaled = compare_scores(score_code(paper.scaled(k), N, 5), score_code(tarokh.scaled(k), N, 5));
        CHECK((base < 0) == (scaled < 0));
      }
    }
  }

  TEST_CASE("assessment lists events worst first") {
    const auto a = assess_code(builtin_code("qpsk4_m2_paper"), 2, 4);
    REQUIRE(!a.events.empty());
    CHECK(a.events.front().metric == doctest::Approx(a.score.worst_metric));
    CHECK(a.score.num_events == static_cast<int>(a.events.size()));
  }
}
