// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sttcaf {

/// Shortest round-trip decimal form, '.' separator regardless of locale.
std::string format_double(double x);

/// RFC 4180 field quoting: wraps in quotes when the field contains a comma,
/// quote or line break.
std::string csv_field(std::string_view text);

std::string csv_row(const std::vector<std::string>& fields);

/// Parses a grid such as "0,5,10" or "8:2:26" (start:step:stop, inclusive).
/// Throws std::invalid_argument on malformed input or a non-increasing grid.
std::vector<double> parse_grid(std::string_view text);

}  // namespace sttcaf
