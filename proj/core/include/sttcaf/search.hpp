// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sttcaf/design.hpp"
#include "sttcaf/trellis.hpp"

namespace sttcaf {

enum class SearchMode { exhaustive, random };

struct SearchConstraints {
  bool first_row_identity = true;  // state 0, input 0 carries the all-zero label
  bool distinct_rows = true;       // reject tables with two identical rows
  bool additive = false;           // label(s, u) = A(u) + B(s) mod K with A(0) = B(0) = 0
};

/// Input-driven label tables (next state = input) over QPSK. A non-empty
/// candidate list replaces the generated space.
struct SearchSpace {
  int antennas = 2;
  int num_states = 4;
  int num_inputs = 4;
  SearchMode mode = SearchMode::random;
  std::uint64_t budget = 100'000;
  SearchConstraints constraints;
  std::vector<TrellisCode> candidates;

  /// Label digits left free by the constraints.
  int free_digits() const;
  /// Throws std::invalid_argument for an ill-formed space, including
  /// exhaustive mode over more than 16 free digits and random mode with a
  /// zero budget.
  void validate() const;
};

inline constexpr int kMaxExhaustiveDigits = 16;

struct RankedCode {
  TrellisCode code;
  DesignScore score;
  int rank_position = 0;  // 1-based
  std::uint64_t candidate_index = 0;
  std::uint64_t spectrum_signature = 0;
};

/// Scores every candidate with assess_code(max_len) and returns the best
/// top_k after collapsing candidates whose event spectra (eigenvalue
/// multisets with multiplicities) coincide. Candidate i of the random space
/// is drawn from its own stream derive_seed(seed, i), and ties after the
/// score are broken by lexicographic table order, so the output does not
/// depend on the thread count. Throws std::domain_error when the
/// constraints leave no admissible candidate.
std::vector<RankedCode> search_codes(const SearchSpace& space, int N, int max_len, std::uint64_t seed,
                                     std::size_t top_k = 10, unsigned threads = 0);

/// Number of candidates the space enumerates (before constraint rejection).
std::uint64_t candidate_count(const SearchSpace& space);

/// Candidate \p index of the space; std::nullopt when the constraints reject it.
std::optional<TrellisCode> generate_candidate(const SearchSpace& space, std::uint64_t index, std::uint64_t seed);

struct CodeComparison {
  int order = 0;  // < 0: a wins, > 0: b wins, 0: tie
  CodeAssessment a;
  CodeAssessment b;
  std::string report;
};

/// Compares two codes with the same antenna count under score_code.
/// Throws std::invalid_argument on mismatched M or alphabet.
CodeComparison compare_codes(const TrellisCode& a, const TrellisCode& b, int N, int max_len,
                             std::size_t report_events = 5);

/// Lexicographic comparison of label tables (row-major digits, then next
/// states); the final tie-break of the search ranking.
int compare_tables(const TrellisCode& a, const TrellisCode& b);

}  // namespace sttcaf
