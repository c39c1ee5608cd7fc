// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include "sttcaf/events.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace sttcaf {

namespace {

// Canonical key of Omega up to multiplication by a unit-modulus scalar.
std::vector<long long> phase_key(const CMatrix& omega) {
  constexpr double kTol = 1e-9;
  std::vector<long long> key;
  key.reserve(static_cast<std::size_t>(2 * omega.size() + 2));
  key.push_back(omega.rows());
  key.push_back(omega.cols());
  Complex rot = 1.0;
  bool found = false;
  for (Eigen::Index j = 0; j < omega.cols() && !found; ++j)
    for (Eigen::Index i = 0; i < omega.rows(); ++i)
      if (std::abs(omega(i, j)) > kTol) {
        rot = std::conj(omega(i, j)) / std::abs(omega(i, j));
        found = true;
        break;
      }
  for (Eigen::Index j = 0; j < omega.cols(); ++j)
    for (Eigen::Index i = 0; i < omega.rows(); ++i) {
      const Complex z = rot * omega(i, j);
      key.push_back(std::llround(z.real() / kTol));
      key.push_back(std::llround(z.imag() / kTol));
    }
  return key;
}

struct PairWalker {
  const TrellisCode& code;
  const EventEnumerationOptions& opt;
  std::vector<DifferenceMatrix>& out;
  std::map<std::vector<long long>, std::size_t> seen;

  std::vector<CVector> diffs;
  int weight = 0;

  void emit(int start) {
    DifferenceMatrix ev;
    ev.length = static_cast<int>(diffs.size());
    ev.omega.resize(code.antennas(), ev.length);
    for (int t = 0; t < ev.length; ++t) ev.omega.col(t) = diffs[static_cast<std::size_t>(t)];
    ev.weight = weight;
    ev.start_state = start;
    if (opt.deduplicate) {
      auto [it, inserted] = seen.emplace(phase_key(ev.omega), out.size());
      if (!inserted) return;
    }
    out.push_back(std::move(ev));
  }

  void walk(int start, int p, int q, bool first) {
    const int k = code.num_inputs();
    for (int u = 0; u < k; ++u) {
      if (opt.all_zero_reference && u != 0) continue;
      for (int v = 0; v < k; ++v) {
        if (first && u == v) continue;
        const Branch& bp = code.branch(p, u);
        const Branch& bq = code.branch(q, v);
        diffs.push_back(code.symbols(p, u) - code.symbols(q, v));
        const int dw = bp.label != bq.label ? 1 : 0;
        weight += dw;
        if (bp.next_state == bq.next_state) {
          emit(start);
        } else if (static_cast<int>(diffs.size()) < opt.max_len) {
          walk(start, bp.next_state, bq.next_state, false);
        }
        weight -= dw;
        diffs.pop_back();
      }
    }
  }
};

constexpr std::array<std::array<int, 2>, 4> kQpskGaussian{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (int x : v) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

struct Accum {
  std::uint64_t count = 0;
  int min_weight = 0;
};

}  // namespace

std::vector<DifferenceMatrix> enumerate_error_events(const TrellisCode& code,
                                                     const EventEnumerationOptions& options) {
  if (options.max_len < 2) throw std::invalid_argument("enumerate_error_events: max_len must be >= 2");
  std::vector<DifferenceMatrix> out;
  PairWalker walker{code, options, out, {}, {}, 0};
  const int starts = options.all_zero_reference ? 1 : code.num_states();
  for (int s = 0; s < starts; ++s) walker.walk(s, s, s, true);
  return out;
}

std::vector<EventClass> event_classes(const TrellisCode& code, int max_len, std::size_t max_frontier) {
  if (max_len < 2) throw std::invalid_argument("event_classes: max_len must be >= 2");
  const int m = code.antennas();
  const int k = code.num_inputs();
  const int tri = m * (m + 1) / 2;

  // Per-branch-pair integer difference vectors (re, im interleaved).
  const int nb = code.num_states() * k;
  std::vector<std::vector<int>> diff(static_cast<std::size_t>(nb * nb));
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b) {
      auto& d = diff[static_cast<std::size_t>(a * nb + b)];
      d.resize(static_cast<std::size_t>(2 * m));
      const auto& la = code.branches()[static_cast<std::size_t>(a)].label;
      const auto& lb = code.branches()[static_cast<std::size_t>(b)].label;
      for (int i = 0; i < m; ++i) {
        const auto& ga = kQpskGaussian[static_cast<std::size_t>(la[static_cast<std::size_t>(i)])];
        const auto& gb = kQpskGaussian[static_cast<std::size_t>(lb[static_cast<std::size_t>(i)])];
        d[static_cast<std::size_t>(2 * i)] = ga[0] - gb[0];
        d[static_cast<std::size_t>(2 * i + 1)] = ga[1] - gb[1];
      }
    }

  // Key layout: [p, q, then upper-triangle Gram (re, im)], accumulated in place.
  auto add_column = [&](std::vector<int>& key, const std::vector<int>& d) {
    int idx = 2;
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        const int ar = d[static_cast<std::size_t>(2 * i)], ai = d[static_cast<std::size_t>(2 * i + 1)];
        const int br = d[static_cast<std::size_t>(2 * j)], bi = d[static_cast<std::size_t>(2 * j + 1)];
        // a * conj(b)
        key[static_cast<std::size_t>(idx)] += ar * br + ai * bi;
        key[static_cast<std::size_t>(idx + 1)] += ai * br - ar * bi;
        idx += 2;
      }
  };

  using Frontier = std::unordered_map<std::vector<int>, Accum, VectorHash>;
  std::map<std::pair<int, std::vector<int>>, Accum> done;

  auto record = [&](int length, std::vector<int> gram, const Accum& acc) {
    auto& slot = done[{length, std::move(gram)}];
    slot.min_weight = slot.count == 0 ? acc.min_weight : std::min(slot.min_weight, acc.min_weight);
    slot.count += acc.count;
  };

  auto extend = [&](const std::vector<int>& key, const Accum& acc, int depth, bool first, Frontier& next) {
    const int p = key[0], q = key[1];
    for (int u = 0; u < k; ++u)
      for (int v = 0; v < k; ++v) {
        if (first && u == v) continue;
        const int a = p * k + u, b = q * k + v;
        const Branch& bp = code.branches()[static_cast<std::size_t>(a)];
        const Branch& bq = code.branches()[static_cast<std::size_t>(b)];
        std::vector<int> nk = key;
        add_column(nk, diff[static_cast<std::size_t>(a * nb + b)]);
        Accum na{acc.count, acc.min_weight + (bp.label != bq.label ? 1 : 0)};
        if (bp.next_state == bq.next_state) {
          record(depth, std::vector<int>(nk.begin() + 2, nk.end()), na);
        } else if (depth < max_len) {
          nk[0] = bp.next_state;
          nk[1] = bq.next_state;
          auto& slot = next[std::move(nk)];
          slot.min_weight = slot.count == 0 ? na.min_weight : std::min(slot.min_weight, na.min_weight);
          slot.count += na.count;
        }
      }
  };

  Frontier frontier;
  for (int s = 0; s < code.num_states(); ++s) {
    std::vector<int> key(static_cast<std::size_t>(2 + 2 * tri), 0);
    key[0] = s;
    key[1] = s;
    Frontier next;
    extend(key, Accum{1, 0}, 1, true, next);
    for (auto& [nk, acc] : next) {
      auto& slot = frontier[nk];
      slot.min_weight = slot.count == 0 ? acc.min_weight : std::min(slot.min_weight, acc.min_weight);
      slot.count += acc.count;
    }
  }
  for (int depth = 2; depth <= max_len && !frontier.empty(); ++depth) {
    if (frontier.size() > max_frontier)
      throw std::length_error("event_classes: frontier exceeds " + std::to_string(max_frontier) +
                              " entries at depth " + std::to_string(depth));
    Frontier next;
    for (const auto& [key, acc] : frontier) extend(key, acc, depth, false, next);
    frontier = std::move(next);
  }

  const double amp2 = code.amplitude() * code.amplitude();
  const double states = code.num_states();
  std::vector<EventClass> out;
  out.reserve(done.size());
  for (const auto& [lk, acc] : done) {
    const auto& [length, g] = lk;
    EventClass ec;
    ec.length = length;
    ec.gram = CMatrix::Zero(m, m);
    int idx = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        const Complex z(g[static_cast<std::size_t>(idx)], g[static_cast<std::size_t>(idx + 1)]);
        ec.gram(i, j) = amp2 * z;
        ec.gram(j, i) = amp2 * std::conj(z);
        idx += 2;
      }
    ec.pair_count = acc.count;
    ec.probability = static_cast<double>(acc.count) / (states * std::pow(static_cast<double>(k), length));
    ec.min_weight = acc.min_weight;
    out.push_back(std::move(ec));
  }
  return out;
}

}  // namespace sttcaf
