// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include "sttcaf/random.hpp"

#include <cmath>

namespace sttcaf {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index) noexcept {
  return mix64(mix64(mix64(master) ^ stream) ^ (index * 0xd1b54a32d192ed03ULL));
}

ComplexGaussian::ComplexGaussian(double variance)
    : scale_(std::sqrt(variance / 2.0)), normal_(0.0, 1.0) {}

std::complex<double> ComplexGaussian::operator()(Rng& rng) {
  if (scale_ == 0.0) return {0.0, 0.0};
  const double re = scale_ * normal_(rng);
  const double im = scale_ * normal_(rng);
  return {re, im};
}

}  // namespace sttcaf
