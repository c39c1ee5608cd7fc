// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include "sttcaf/search.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sttcaf/events.hpp"
#include "sttcaf/parallel.hpp"
#include "sttcaf/random.hpp"

namespace sttcaf {

namespace {

constexpr std::uint64_t kCandidateStream = 0x5ea7c4;

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

double round10(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 9);
  double out = x;
  std::from_chars(buf, res.ptr, out, std::chars_format::scientific);
  return out;
}

std::uint64_t spectrum_signature(const CodeAssessment& assessment) {
  std::map<std::vector<double>, std::uint64_t> multiset;
  for (const auto& ev : assessment.events) {
    std::vector<double> key;
    for (double l : ev.spectrum.lambdas) key.push_back(round10(l));
    multiset[key] += ev.pair_count;
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint64_t v) { h = mix64(h ^ v); };
  for (const auto& [key, count] : multiset) {
    for (double l : key) {
      std::uint64_t bits = 0;
      static_assert(sizeof bits == sizeof l);
      std::memcpy(&bits, &l, sizeof bits);
      feed(bits);
    }
    feed(count);
  }
  return h;
}

std::vector<std::uint8_t> table_key(const TrellisCode& code) {
  std::vector<std::uint8_t> key;
  for (const auto& b : code.branches())
    for (int d : b.label) key.push_back(static_cast<std::uint8_t>(d));
  for (const auto& b : code.branches()) key.push_back(static_cast<std::uint8_t>(b.next_state));
  return key;
}

struct Scored {
  std::uint64_t index = 0;
  bool admitted = false;
  DesignScore score;
  std::uint64_t signature = 0;
  std::vector<std::uint8_t> key;
};

std::string hex_name(std::uint64_t h) {
  std::ostringstream os;
  os << "t" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace

int SearchSpace::free_digits() const {
  if (constraints.additive) return antennas * (num_inputs - 1) + antennas * (num_states - 1);
  int digits = antennas * num_states * num_inputs;
  if (constraints.first_row_identity) digits -= antennas;
  return digits;
}

void SearchSpace::validate() const {
  if (!candidates.empty()) {
    for (const auto& c : candidates)
      if (c.antennas() != candidates.front().antennas() || c.num_inputs() != candidates.front().num_inputs())
        throw std::invalid_argument("search space: candidates differ in antenna count or alphabet");
    return;
  }
  if (antennas < 1 || antennas > 8) throw std::invalid_argument("search space: antennas must be in 1..8");
  if (num_inputs < 2 || num_inputs > 4) throw std::invalid_argument("search space: num_inputs must be in 2..4");
  if (num_states < num_inputs || num_states > 64)
    throw std::invalid_argument("search space: need num_inputs <= num_states <= 64 for input-driven tables");
  if (mode == SearchMode::exhaustive && free_digits() > kMaxExhaustiveDigits)
    throw std::invalid_argument("search space: exhaustive mode allows at most " +
                                std::to_string(kMaxExhaustiveDigits) + " free digits, space has " +
                                std::to_string(free_digits()) + "; use random mode");
  if (mode == SearchMode::random && budget == 0) throw std::invalid_argument("search space: budget must be positive");
}

std::uint64_t candidate_count(const SearchSpace& space) {
  if (!space.candidates.empty()) return space.candidates.size();
  if (space.mode == SearchMode::random) return space.budget;
  return ipow(static_cast<std::uint64_t>(space.num_inputs), space.free_digits());
}

std::optional<TrellisCode> generate_candidate(const SearchSpace& space, std::uint64_t index, std::uint64_t seed) {
  if (!space.candidates.empty()) return space.candidates.at(static_cast<std::size_t>(index));

  const int m = space.antennas, k = space.num_inputs, s = space.num_states;
  const int free = space.free_digits();
  std::vector<int> digits(static_cast<std::size_t>(free));
  if (space.mode == SearchMode::exhaustive) {
    std::uint64_t v = index;
    for (int i = free - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<std::uint64_t>(k));
      v /= static_cast<std::uint64_t>(k);
    }
  } else {
    Rng rng = make_rng(seed, kCandidateStream, index);
    for (auto& d : digits) d = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
  }

  std::vector<Branch> branches(static_cast<std::size_t>(s * k));
  std::size_t next = 0;
  if (space.constraints.additive) {
    // digits hold A(1..k-1) then B(1..s-1); label(st, u) = A(u) + B(st) mod k
    auto digit = [&](int block, int row, int i) {
      if (row == 0) return 0;
      const int base = block == 0 ? 0 : m * (k - 1);
      return digits[static_cast<std::size_t>(base + (row - 1) * m + i)];
    };
    for (int st = 0; st < s; ++st)
      for (int u = 0; u < k; ++u) {
        Branch& b = branches[static_cast<std::size_t>(st * k + u)];
        b.next_state = u;
        b.label.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) b.label[static_cast<std::size_t>(i)] = (digit(0, u, i) + digit(1, st, i)) % k;
      }
  } else {
    for (int st = 0; st < s; ++st)
      for (int u = 0; u < k; ++u) {
        Branch& b = branches[static_cast<std::size_t>(st * k + u)];
        b.next_state = u;
        b.label.resize(static_cast<std::size_t>(m));
        const bool fixed = space.constraints.first_row_identity && st == 0 && u == 0;
        for (int i = 0; i < m; ++i) b.label[static_cast<std::size_t>(i)] = fixed ? 0 : digits[next++];
      }
  }

  if (space.constraints.distinct_rows) {
    std::set<std::vector<std::vector<int>>> rows;
    for (int st = 0; st < s; ++st) {
      std::vector<std::vector<int>> row;
      for (int u = 0; u < k; ++u) row.push_back(branches[static_cast<std::size_t>(st * k + u)].label);
      if (!rows.insert(std::move(row)).second) return std::nullopt;
    }
  }

  TrellisCode code("", s, k, m, std::move(branches));
  return code.renamed(hex_name(code.table_hash()));
}

int compare_tables(const TrellisCode& a, const TrellisCode& b) {
  const auto ka = table_key(a), kb = table_key(b);
  if (ka == kb) return 0;
  return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end()) ? -1 : 1;
}

std::vector<RankedCode> search_codes(const SearchSpace& space, int N, int max_len, std::uint64_t seed,
                                     std::size_t top_k, unsigned threads) {
  space.validate();
  if (N < 1) throw std::invalid_argument("search_codes: N must be >= 1");
  const std::uint64_t count = candidate_count(space);
  std::vector<Scored> scored(static_cast<std::size_t>(count));

  parallel_for(
      static_cast<std::size_t>(count),
      [&](std::size_t i) {
        auto code = generate_candidate(space, i, seed);
        Scored& out = scored[i];
        out.index = i;
        if (!code) return;
        const CodeAssessment assessment = assess_code(*code, N, max_len);
        out.admitted = true;
        out.score = assessment.score;
        out.signature = spectrum_signature(assessment);
        out.key = table_key(*code);
      },
      threads);

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < scored.size(); ++i)
    if (scored[i].admitted) order.push_back(i);
  if (order.empty()) throw std::domain_error("search_codes: constraints reject every candidate");

  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const int c = compare_scores(scored[x].score, scored[y].score);
    if (c != 0) return c < 0;
    return scored[x].key < scored[y].key;
  });

  std::vector<RankedCode> ranked;
  std::set<std::uint64_t> seen;
  for (std::size_t idx : order) {
    if (ranked.size() >= top_k) break;
    const Scored& sc = scored[idx];
    if (!seen.insert(sc.signature).second) continue;
    RankedCode rc{*generate_candidate(space, sc.index, seed), sc.score, static_cast<int>(ranked.size()) + 1,
                  sc.index, sc.signature};
    ranked.push_back(std::move(rc));
  }
  return ranked;
}

CodeComparison compare_codes(const TrellisCode& a, const TrellisCode& b, int N, int max_len,
                             std::size_t report_events) {
  if (a.antennas() != b.antennas()) throw std::invalid_argument("compare_codes: codes have different antenna counts");
  if (a.num_inputs() != b.num_inputs()) throw std::invalid_argument("compare_codes: codes use different alphabets");
  CodeComparison cmp;
  cmp.a = assess_code(a, N, max_len);
  cmp.b = assess_code(b, N, max_len);
  cmp.order = compare_scores(cmp.a.score, cmp.b.score);

  std::ostringstream os;
  os << std::setprecision(6);
  os << "criterion " << to_string(cmp.a.score.criterion) << ", N=" << N << ", max_len=" << max_len << "\n";
  auto section = [&](const TrellisCode& code, const CodeAssessment& as) {
    os << code.name() << ": min_rank=" << as.score.min_rank << " worst_metric=" << as.score.worst_metric
       << " tie_break=" << as.score.tie_break << " events=" << as.score.num_events << "\n";
    os << "  L  pairs  lambdas  metric\n";
    for (std::size_t i = 0; i < std::min(report_events, as.events.size()); ++i) {
      const auto& ev = as.events[i];
      os << "  " << ev.length << "  " << ev.pair_count << "  (";
      for (std::size_t j = 0; j < ev.spectrum.lambdas.size(); ++j)
        os << (j ? ", " : "") << ev.spectrum.lambdas[j];
      os << ")  ";
      if (ev.excluded)
        os << "rank-deficient";
      else
        os << ev.metric << (ev.fallback ? " (exact-MGF reference)" : "");
      os << "\n";
    }
  };
  section(a, cmp.a);
  section(b, cmp.b);
  os << "winner: " << (cmp.order < 0 ? a.name() : cmp.order > 0 ? b.name() : std::string("tie")) << "\n";
  cmp.report = os.str();
  return cmp;
}

}  // namespace sttcaf
