// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace sttcaf {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for sub-stream (stream, index) of a master seed. Different
/// (stream, index) pairs give statistically unrelated engines, so work items
/// can be scheduled in any order and still draw identical numbers.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index = 0) noexcept;

inline Rng make_rng(std::uint64_t master, std::uint64_t stream = 0,
                    std::uint64_t index = 0) {
  return Rng(derive_seed(master, stream, index));
}

/// Circularly-symmetric complex Gaussian source, E|z|^2 = variance.
/// A zero variance yields exact zeros without consuming the engine.
class ComplexGaussian {
 public:
  explicit ComplexGaussian(double variance = 1.0);

  std::complex<double> operator()(Rng& rng);

 private:
  double scale_;
  std::normal_distribution<double> normal_;
};

}  // namespace sttcaf
