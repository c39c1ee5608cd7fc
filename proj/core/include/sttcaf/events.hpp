// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include <cstdint>
#include <vector>

#include "sttcaf/linalg.hpp"
#include "sttcaf/trellis.hpp"

namespace sttcaf {

/// Codeword difference c - c' over one error event.
struct DifferenceMatrix {
  CMatrix omega;   // M x L
  int length = 0;  // L, branches from divergence to remerge
  int weight = 0;  // branch positions whose labels differ
  int start_state = 0;
};

struct EventEnumerationOptions {
  int max_len = 8;
  /// Only the all-zero input path from state 0 serves as reference; valid
  /// for geometrically uniform codes.
  bool all_zero_reference = false;
  /// Collapse events whose Omega agree up to a unit-modulus factor.
  bool deduplicate = true;
};

/// All ordered path pairs that leave a common state with different first
/// inputs and first share a state again after exactly L <= max_len branches.
/// Cost grows like (K(K-1))^(L-1); use event_classes for long events.
/// Throws std::invalid_argument if max_len < 2.
std::vector<DifferenceMatrix> enumerate_error_events(const TrellisCode& code,
                                                     const EventEnumerationOptions& options);

inline std::vector<DifferenceMatrix> enumerate_error_events(const TrellisCode& code, int max_len) {
  return enumerate_error_events(code, EventEnumerationOptions{max_len, false, true});
}

/// Error events aggregated by (length, Omega Omega^H). Two events with the
/// same Gram matrix have identical pairwise error probability, so this is
/// all the union bound and the design metrics need.
/// Event length used when none is given: 8 branches for M <= 2, 4 beyond
/// (the number of distinct Gram classes grows steeply with M).
inline int default_max_event_len(int antennas) { return antennas <= 2 ? 8 : 4; }

struct EventClass {
  int length = 0;
  CMatrix gram;                   // Omega Omega^H, at the code's amplitude
  std::uint64_t pair_count = 0;   // ordered (reference, competitor) pairs over all start states
  double probability = 0.0;       // sum over pairs of P(start state) * P(reference inputs)
  int min_weight = 0;
};

/// Exact dynamic program over the pair-state trellis, keyed on the integer
/// Gram matrix of unit-amplitude QPSK differences. Output is sorted by
/// (length, Gram entries). Throws std::invalid_argument if max_len < 2 and
/// std::length_error if the frontier exceeds \p max_frontier entries.
std::vector<EventClass> event_classes(const TrellisCode& code, int max_len,
                                      std::size_t max_frontier = 20'000'000);

}  // namespace sttcaf
