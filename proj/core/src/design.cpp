// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include "sttcaf/design.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sttcaf/mgf.hpp"

namespace sttcaf {

namespace {

// Events whose nonzero eigenvalues are closer than this use the exact-MGF
// reference value; the partial-fraction sum loses accuracy near coincidence.
constexpr double kScoringDistinctGap = 1e-3;
constexpr std::size_t kTieBreakEvents = 10;

double round_significant(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 11);
  double out = x;
  std::from_chars(buf, res.ptr, out, std::chars_format::scientific);
  return out;
}

int compare_metric(double a, double b, bool larger_is_better) {
  a = round_significant(a);
  b = round_significant(b);
  if (a == b) return 0;
  const bool a_better = larger_is_better ? a > b : a < b;
  return a_better ? -1 : 1;
}

}  // namespace

std::string_view to_string(Criterion c) {
  return c == Criterion::determinant ? "determinant" : "log_eig";
}

double metric_determinant(const Spectrum& spec) {
  if (spec.antennas() == 0 || spec.rank < spec.antennas())
    throw std::domain_error("metric_determinant: rank-deficient spectrum");
  return spec.product();
}

double metric_log_eig(const Spectrum& spec, int N) {
  const int M = spec.antennas();
  if (N < 1 || N >= M) throw std::invalid_argument("metric_log_eig: requires 1 <= N < M");
  if (spec.rank < M) throw std::domain_error("metric_log_eig: zero eigenvalue");
  if (!eigenvalues_distinct(spec)) throw std::domain_error("metric_log_eig: repeated eigenvalues");
  const double sign = (N - 1) % 2 == 0 ? 1.0 : -1.0;
  return sign * log_eig_partial_fraction_sum(spec, N);
}

double metric_log_eig_fallback(const Spectrum& spec, int N) {
  const double s = kFallbackReferenceS;
  return std::tgamma(static_cast<double>(N)) * std::pow(-s, N) * mgf_exact(spec, N, s).value;
}

CodeAssessment assess_events(std::span<const EventClass> events, int M, int N) {
  if (events.empty()) throw std::domain_error("score_code: trellis has no error events");
  if (N < 1) throw std::invalid_argument("score_code: N must be >= 1");
  CodeAssessment out;
  DesignScore& score = out.score;
  score.criterion = criterion_for(M, N);
  score.min_rank = M;
  score.num_events = static_cast<int>(events.size());

  for (const auto& ev : events) {
    EventMetric em;
    em.length = ev.length;
    em.spectrum = spectrum_of_gram(ev.gram);
    em.pair_count = ev.pair_count;
    em.probability = ev.probability;
    score.min_rank = std::min(score.min_rank, em.spectrum.rank);

    if (score.criterion == Criterion::determinant) {
      if (em.spectrum.rank < M) {
        em.excluded = true;
        em.metric = std::numeric_limits<double>::quiet_NaN();
      } else {
        em.metric = metric_determinant(em.spectrum);
      }
    } else {
      const Spectrum nz = nonzero_part(em.spectrum);
      if (nz.rank > N && eigenvalues_distinct(nz, kScoringDistinctGap)) {
        em.metric = metric_log_eig(nz, N);
      } else {
        em.metric = metric_log_eig_fallback(em.spectrum, N);
        em.fallback = true;
      }
    }
    out.events.push_back(std::move(em));
  }

  const bool det = score.criterion == Criterion::determinant;
  // Worst first; excluded events lead under the determinant criterion.
  std::stable_sort(out.events.begin(), out.events.end(), [det](const EventMetric& a, const EventMetric& b) {
    if (a.excluded != b.excluded) return a.excluded;
    if (a.excluded) return false;
    return det ? a.metric < b.metric : a.metric > b.metric;
  });

  score.full_diversity = det ? score.min_rank == M : score.min_rank >= N;
  score.worst_metric = 0.0;
  score.tie_break = 0.0;
  std::size_t counted = 0;
  bool have_worst = false;
  for (const auto& em : out.events) {
    if (em.excluded) continue;
    if (!have_worst) {
      score.worst_metric = em.metric;
      have_worst = true;
    }
    if (counted < kTieBreakEvents) {
      score.tie_break += em.metric;
      ++counted;
    }
  }
  score.worst_metric = round_significant(score.worst_metric);
  score.tie_break = round_significant(score.tie_break);
  return out;
}

CodeAssessment assess_code(const TrellisCode& code, int N, int max_len) {
  const auto events = event_classes(code, max_len);
  return assess_events(events, code.antennas(), N);
}

DesignScore score_code(const TrellisCode& code, int N, int max_len) { return assess_code(code, N, max_len).score; }

int compare_scores(const DesignScore& a, const DesignScore& b) {
  if (a.criterion != b.criterion) throw std::invalid_argument("compare_scores: criteria differ");
  if (a.min_rank != b.min_rank) return a.min_rank > b.min_rank ? -1 : 1;
  const bool larger = a.criterion == Criterion::determinant;
  if (int c = compare_metric(a.worst_metric, b.worst_metric, larger); c != 0) return c;
  return compare_metric(a.tie_break, b.tie_break, larger);
}

}  // namespace sttcaf
