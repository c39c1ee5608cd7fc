// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sttcaf/events.hpp"
#include "sttcaf/spectrum.hpp"
#include "sttcaf/trellis.hpp"

namespace sttcaf {

/// Determinant criterion (N >= M): prod lambda_i, larger is better.
/// Throws std::domain_error unless the spectrum has full rank.
double metric_determinant(const Spectrum& spec);

/// Log-eigenvalue criterion (N < M):
///   (-1)^{N-1} sum_i (log lambda_i / lambda_i^N) prod_{i1 != i} lambda_i / (lambda_i - lambda_i1),
/// the coefficient of the dominant |s|^-N PEP term times Gamma(N); smaller is
/// better. Throws std::invalid_argument unless N < M and std::domain_error
/// for zero or repeated (relative gap <= 1e-6) eigenvalues.
double metric_log_eig(const Spectrum& spec, int N);

/// Reference argument used when the log-eigenvalue form is undefined:
/// Gamma(N) |s_ref|^N M(s_ref) converges to the same coefficient.
inline constexpr double kFallbackReferenceS = -1e8;
double metric_log_eig_fallback(const Spectrum& spec, int N);

enum class Criterion { determinant, log_eig };
std::string_view to_string(Criterion c);
inline Criterion criterion_for(int M, int N) { return N >= M ? Criterion::determinant : Criterion::log_eig; }

struct EventMetric {
  int length = 0;
  Spectrum spectrum;
  double metric = 0.0;      // determinant or log-eig value; NaN when excluded
  bool fallback = false;    // log_eig: exact-MGF reference value used
  bool excluded = false;    // determinant: rank-deficient event
  std::uint64_t pair_count = 0;
  double probability = 0.0;
};

struct DesignScore {
  int min_rank = 0;
  double worst_metric = 0.0;
  Criterion criterion = Criterion::determinant;
  double tie_break = 0.0;  // sum of metrics over the 10 worst events
  int num_events = 0;
  bool full_diversity = false;  // every event reaches diversity min(M, N)
};

struct CodeAssessment {
  DesignScore score;
  std::vector<EventMetric> events;  // worst first
};

/// Scores precomputed event classes of an M-antenna code.
CodeAssessment assess_events(std::span<const EventClass> events, int M, int N);
CodeAssessment assess_code(const TrellisCode& code, int N, int max_len);
/// Throws std::domain_error when the trellis yields no error events.
DesignScore score_code(const TrellisCode& code, int N, int max_len);

/// Negative when a ranks strictly better than b, zero on a tie: min_rank
/// descending, then worst_metric, then tie_break (determinant: larger wins;
/// log_eig: smaller wins). Metrics are compared after rounding to 12
/// significant digits, which keeps the ordering a total preorder. Throws
/// std::invalid_argument when the criteria differ.
int compare_scores(const DesignScore& a, const DesignScore& b);

}  // namespace sttcaf
