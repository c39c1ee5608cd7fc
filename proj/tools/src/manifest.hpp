// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace sttcaf::cli {

struct RunManifest {
  std::string command;
  std::vector<std::string> args;  // canonical argument list, defaults resolved
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::uint64_t seed = 0;
  std::string tool_version;
  std::string timestamp;
  std::vector<std::string> outputs;
};

nlohmann::ordered_json to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::json& j);

void write_manifest(const RunManifest& m, const std::string& path);
RunManifest read_manifest(const std::string& path);

std::string utc_timestamp();

}  // namespace sttcaf::cli
