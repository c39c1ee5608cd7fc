// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include "manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace sttcaf::cli {

nlohmann::ordered_json to_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["command"] = m.command;
  j["args"] = m.args;
  j["params"] = m.params;
  j["seed"] = m.seed;
  j["tool_version"] = m.tool_version;
  j["timestamp"] = m.timestamp;
  j["outputs"] = m.outputs;
  return j;
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.args = j.at("args").get<std::vector<std::string>>();
  if (j.contains("params")) m.params = j.at("params");
  m.seed = j.value("seed", std::uint64_t{0});
  m.tool_version = j.value("tool_version", std::string{});
  m.timestamp = j.value("timestamp", std::string{});
  if (j.contains("outputs")) m.outputs = j.at("outputs").get<std::vector<std::string>>();
  return m;
}

void write_manifest(const RunManifest& m, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write manifest " + path);
  f << to_json(m).dump(2) << '\n';
}

RunManifest read_manifest(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot read manifest " + path);
  nlohmann::json j;
  try {
    f >> j;
    return manifest_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed manifest " + path + ": " + e.what());
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace sttcaf::cli
