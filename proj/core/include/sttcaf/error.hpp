// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include <stdexcept>
#include <string>

namespace sttcaf {

/// Raised when a numerical procedure (quadrature, eigensolver) fails to
/// reach its accuracy target. Precondition violations use the standard
/// std::invalid_argument / std::domain_error family instead.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sttcaf
