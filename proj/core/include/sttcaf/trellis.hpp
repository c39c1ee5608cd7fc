// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sttcaf/linalg.hpp"

namespace sttcaf {

/// QPSK point exp(i*pi*u/2) for u in 0..3; throws std::out_of_range otherwise.
Complex qpsk_map(int index);

struct Branch {
  std::vector<int> label;  // one constellation index per transmit antenna
  int next_state = 0;
};

/// Finite-state space-time trellis encoder over QPSK. Immutable once built.
class TrellisCode {
 public:
  /// \p branches is row-major over (state, input). Throws
  /// std::invalid_argument unless the table is total, every label has
  /// \p antennas digits below num_inputs, and every next state is in range.
  TrellisCode(std::string name, int num_states, int num_inputs, int antennas,
              std::vector<Branch> branches, double amplitude = 1.0);

  const std::string& name() const noexcept { return name_; }
  int num_states() const noexcept { return num_states_; }
  int num_inputs() const noexcept { return num_inputs_; }
  int antennas() const noexcept { return antennas_; }
  /// Common scale applied to every constellation point.
  double amplitude() const noexcept { return amplitude_; }

  const Branch& branch(int state, int input) const;
  const std::vector<Branch>& branches() const noexcept { return branches_; }

  /// Transmitted symbol vector (M x 1) for a branch.
  CVector symbols(int state, int input) const;

  TrellisCode renamed(std::string name) const;
  TrellisCode scaled(double amplitude) const;

  /// Smallest k such that every state reaches state 0 in exactly k steps, and
  /// the input sequence achieving it from \p state. Throws std::domain_error
  /// when the trellis cannot be terminated.
  int termination_length() const;
  std::vector<int> termination_inputs(int state) const;

  /// Stable 64-bit FNV-1a hash of the label/next-state table.
  std::uint64_t table_hash() const;

  friend bool operator==(const TrellisCode& a, const TrellisCode& b);

 private:
  std::string name_;
  int num_states_;
  int num_inputs_;
  int antennas_;
  double amplitude_;
  std::vector<Branch> branches_;
};

/// The four 4-state QPSK codes from the figure tables: qpsk4_m2_paper,
/// qpsk4_m2_tarokh, qpsk4_m4_paper, qpsk4_m4_tarokh. Row = current state,
/// column = input, next state = input.
const std::vector<TrellisCode>& builtin_codes();

/// Looks up a built-in by name; throws std::invalid_argument if unknown.
const TrellisCode& builtin_code(std::string_view name);

/// Encodes one codeword; column t is the symbol vector of branch t.
CMatrix encode(const TrellisCode& code, std::span<const int> inputs, int initial_state = 0);

/// Builds an input-driven code (next state = column) from a label table:
/// \p num_states rows of num_inputs whitespace- or comma-separated M-digit
/// labels. Blank lines and lines starting with '#' are skipped.
TrellisCode code_from_labels(std::string_view rows, int antennas, int num_states,
                             int num_inputs = 4, std::string name = "custom");

/// Code catalog text: header "M num_states num_inputs" then the label rows.
TrellisCode parse_catalog(std::string_view text, std::string name = "custom");
std::string format_catalog(const TrellisCode& code);

/// Reads a catalog file, naming the code after the file stem.
TrellisCode load_catalog_file(const std::string& path);

/// Built-in name or catalog file path.
TrellisCode resolve_code(const std::string& ref);

/// Label table of an input-driven code as figure-style rows, e.g. "00 20 02 22".
std::string label_rows(const TrellisCode& code);

}  // namespace sttcaf
