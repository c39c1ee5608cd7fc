// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include "sttcaf/trellis.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sttcaf {

Complex qpsk_map(int index) {
  switch (index) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    case 3: return {0.0, -1.0};
    default: throw std::out_of_range("qpsk_map: index " + std::to_string(index) + " not in 0..3");
  }
}

TrellisCode::TrellisCode(std::string name, int num_states, int num_inputs, int antennas,
                         std::vector<Branch> branches, double amplitude)
    : name_(std::move(name)),
      num_states_(num_states),
      num_inputs_(num_inputs),
      antennas_(antennas),
      amplitude_(amplitude),
      branches_(std::move(branches)) {
  if (num_states_ < 1 || num_states_ > 64) throw std::invalid_argument("TrellisCode: num_states must be in 1..64");
  if (num_inputs_ < 2 || num_inputs_ > 4) throw std::invalid_argument("TrellisCode: num_inputs must be in 2..4 (QPSK)");
  if (antennas_ < 1 || antennas_ > 8) throw std::invalid_argument("TrellisCode: antennas must be in 1..8");
  if (!(amplitude_ > 0.0)) throw std::invalid_argument("TrellisCode: amplitude must be positive");
  if (branches_.size() != static_cast<std::size_t>(num_states_ * num_inputs_))
    throw std::invalid_argument("TrellisCode: branch table is not total over states x inputs");
  for (const auto& b : branches_) {
    if (b.next_state < 0 || b.next_state >= num_states_)
      throw std::invalid_argument("TrellisCode: next state out of range");
    if (b.label.size() != static_cast<std::size_t>(antennas_))
      throw std::invalid_argument("TrellisCode: label length differs from antenna count");
    for (int d : b.label)
      if (d < 0 || d >= num_inputs_) throw std::invalid_argument("TrellisCode: label digit out of range");
  }
}

const Branch& TrellisCode::branch(int state, int input) const {
  if (state < 0 || state >= num_states_) throw std::out_of_range("TrellisCode: state out of range");
  if (input < 0 || input >= num_inputs_) throw std::out_of_range("TrellisCode: input out of range");
  return branches_[static_cast<std::size_t>(state * num_inputs_ + input)];
}

CVector TrellisCode::symbols(int state, int input) const {
  const Branch& b = branch(state, input);
  CVector s(antennas_);
  for (int m = 0; m < antennas_; ++m) s(m) = amplitude_ * qpsk_map(b.label[static_cast<std::size_t>(m)]);
  return s;
}

TrellisCode TrellisCode::renamed(std::string name) const {
  TrellisCode c = *this;
  c.name_ = std::move(name);
  return c;
}

TrellisCode TrellisCode::scaled(double amplitude) const {
  return TrellisCode(name_, num_states_, num_inputs_, antennas_, branches_, amplitude);
}

int TrellisCode::termination_length() const {
  // reach[s]: state s can reach 0 in exactly k steps.
  std::vector<char> reach(static_cast<std::size_t>(num_states_), 0);
  reach[0] = 1;
  for (int k = 0; k <= 2 * num_states_; ++k) {
    if (std::all_of(reach.begin(), reach.end(), [](char c) { return c != 0; })) return k;
    std::vector<char> next(reach.size(), 0);
    for (int s = 0; s < num_states_; ++s)
      for (int u = 0; u < num_inputs_; ++u)
        if (reach[static_cast<std::size_t>(branch(s, u).next_state)]) next[static_cast<std::size_t>(s)] = 1;
    reach = std::move(next);
  }
  throw std::domain_error("TrellisCode: trellis cannot be terminated in state 0");
}

std::vector<int> TrellisCode::termination_inputs(int state) const {
  const int k = termination_length();
  // can[j][s]: s reaches 0 in exactly j steps.
  std::vector<std::vector<char>> can(static_cast<std::size_t>(k) + 1,
                                     std::vector<char>(static_cast<std::size_t>(num_states_), 0));
  can[0][0] = 1;
  for (int j = 1; j <= k; ++j)
    for (int s = 0; s < num_states_; ++s)
      for (int u = 0; u < num_inputs_; ++u)
        if (can[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(branch(s, u).next_state)])
          can[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] = 1;
  std::vector<int> inputs;
  int s = state;
  for (int j = k; j > 0; --j) {
    for (int u = 0; u < num_inputs_; ++u) {
      const int ns = branch(s, u).next_state;
      if (can[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(ns)]) {
        inputs.push_back(u);
        s = ns;
        break;
      }
    }
  }
  return inputs;
}

std::uint64_t TrellisCode::table_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](int v) {
    h ^= static_cast<std::uint64_t>(v) & 0xff;
    h *= 0x100000001b3ULL;
  };
  feed(num_states_);
  feed(num_inputs_);
  feed(antennas_);
  for (const auto& b : branches_) {
    for (int d : b.label) feed(d);
    feed(b.next_state);
  }
  return h;
}

bool operator==(const TrellisCode& a, const TrellisCode& b) {
  if (a.num_states_ != b.num_states_ || a.num_inputs_ != b.num_inputs_ || a.antennas_ != b.antennas_ ||
      a.amplitude_ != b.amplitude_)
    return false;
  for (std::size_t i = 0; i < a.branches_.size(); ++i)
    if (a.branches_[i].label != b.branches_[i].label || a.branches_[i].next_state != b.branches_[i].next_state)
      return false;
  return true;
}

namespace {

struct BuiltinTable {
  const char* name;
  int antennas;
  const char* rows;
};

constexpr BuiltinTable kBuiltins[] = {
    {"qpsk4_m2_paper", 2,
     "00 20 02 22\n"
     "01 21 03 23\n"
     "11 31 13 33\n"
     "12 32 10 30\n"},
    {"qpsk4_m2_tarokh", 2,
     "00 01 02 03\n"
     "10 11 12 13\n"
     "20 21 22 23\n"
     "30 31 32 33\n"},
    {"qpsk4_m4_paper", 4,
     "0000 2030 0012 2022\n"
     "0101 2131 0113 2123\n"
     "1201 3231 1213 3223\n"
     "1230 3332 1310 3320\n"},
    {"qpsk4_m4_tarokh", 4,
     "0000 0001 0002 0003\n"
     "1011 1012 1013 1010\n"
     "2021 2122 2223 2320\n"
     "3032 3133 3130 3231\n"},
};

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

// Non-blank, non-comment lines.
std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

const std::vector<TrellisCode>& builtin_codes() {
  static const std::vector<TrellisCode> codes = [] {
    std::vector<TrellisCode> v;
    for (const auto& t : kBuiltins) v.push_back(code_from_labels(t.rows, t.antennas, 4, 4, t.name));
    return v;
  }();
  return codes;
}

const TrellisCode& builtin_code(std::string_view name) {
  for (const auto& c : builtin_codes())
    if (c.name() == name) return c;
  throw std::invalid_argument("unknown built-in code '" + std::string(name) + "'");
}

CMatrix encode(const TrellisCode& code, std::span<const int> inputs, int initial_state) {
  if (initial_state < 0 || initial_state >= code.num_states())
    throw std::out_of_range("encode: initial state out of range");
  CMatrix out(code.antennas(), static_cast<Eigen::Index>(inputs.size()));
  int state = initial_state;
  for (std::size_t t = 0; t < inputs.size(); ++t) {
    out.col(static_cast<Eigen::Index>(t)) = code.symbols(state, inputs[t]);
    state = code.branch(state, inputs[t]).next_state;
  }
  return out;
}

TrellisCode code_from_labels(std::string_view rows, int antennas, int num_states, int num_inputs,
                             std::string name) {
  const auto lines = content_lines(rows);
  if (static_cast<int>(lines.size()) != num_states)
    throw std::invalid_argument("label table has " + std::to_string(lines.size()) + " rows, expected " +
                                std::to_string(num_states));
  std::vector<Branch> branches;
  branches.reserve(static_cast<std::size_t>(num_states * num_inputs));
  for (const auto& line : lines) {
    const auto tokens = split_tokens(line);
    if (static_cast<int>(tokens.size()) != num_inputs)
      throw std::invalid_argument("label row '" + line + "' has " + std::to_string(tokens.size()) +
                                  " labels, expected " + std::to_string(num_inputs));
    for (std::size_t u = 0; u < tokens.size(); ++u) {
      const auto& tok = tokens[u];
      if (static_cast<int>(tok.size()) != antennas)
        throw std::invalid_argument("label '" + tok + "' does not have " + std::to_string(antennas) + " digits");
      Branch b;
      b.next_state = static_cast<int>(u);
      for (char ch : tok) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("label '" + tok + "' contains a non-digit");
        const int d = ch - '0';
        if (d >= num_inputs)
          throw std::invalid_argument("label '" + tok + "' has digit " + std::to_string(d) + " >= num_inputs");
        b.label.push_back(d);
      }
      branches.push_back(std::move(b));
    }
  }
  return TrellisCode(std::move(name), num_states, num_inputs, antennas, std::move(branches));
}

TrellisCode parse_catalog(std::string_view text, std::string name) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("catalog: missing header line");
  const auto header = split_tokens(lines.front());
  if (header.size() != 3) throw std::invalid_argument("catalog: header must be 'M num_states num_inputs'");
  int values[3];
  for (int i = 0; i < 3; ++i) {
    try {
      std::size_t used = 0;
      values[i] = std::stoi(header[static_cast<std::size_t>(i)], &used);
      if (used != header[static_cast<std::size_t>(i)].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument("catalog: header field '" + header[static_cast<std::size_t>(i)] +
                                  "' is not an integer");
    }
  }
  std::string body;
  for (std::size_t i = 1; i < lines.size(); ++i) body += lines[i] + "\n";
  return code_from_labels(body, values[0], values[1], values[2], std::move(name));
}

std::string label_rows(const TrellisCode& code) {
  std::string out;
  for (int s = 0; s < code.num_states(); ++s) {
    for (int u = 0; u < code.num_inputs(); ++u) {
      const Branch& b = code.branch(s, u);
      if (b.next_state != u) throw std::domain_error("label_rows: code '" + code.name() + "' is not input-driven");
      if (u > 0) out += ' ';
      for (int d : b.label) out += static_cast<char>('0' + d);
    }
    out += '\n';
  }
  return out;
}

std::string format_catalog(const TrellisCode& code) {
  std::string out = "# " + code.name() + "\n";
  out += std::to_string(code.antennas()) + " " + std::to_string(code.num_states()) + " " +
         std::to_string(code.num_inputs()) + "\n";
  out += label_rows(code);
  return out;
}

TrellisCode load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read catalog file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str(), std::filesystem::path(path).stem().string());
}

TrellisCode resolve_code(const std::string& ref) {
  for (const auto& c : builtin_codes())
    if (c.name() == ref) return c;
  if (std::filesystem::exists(ref)) return load_catalog_file(ref);
  throw std::invalid_argument("unknown code '" + ref + "' (not a built-in name or readable catalog file)");
}

}  // namespace sttcaf
