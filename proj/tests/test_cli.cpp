// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using sttcaf::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("list-codes") {
    const auto r = call({"list-codes"});
    CHECK(r.code == 0);
    for (const char* name : {"qpsk4_m2_paper", "qpsk4_m2_tarokh", "qpsk4_m4_paper", "qpsk4_m4_tarokh"})
      CHECK(r.out.find(name) != std::string::npos);
  }

  TEST_CASE("analyze dispatches the criterion") {
    const auto det = call({"analyze", "--code", "qpsk4_m2_tarokh", "--antennas-rx", "2", "--max-event-len", "4"});
    CHECK(det.code == 0);
    CHECK(det.out.find("# criterion=determinant\n") != std::string::npos);
    CHECK(det.out.find("# min_rank=2\n") != std::string::npos);
    CHECK(det.out.rfind("event_id,L,multiplicity,weight,rank,lambda_1,lambda_2,metric,craig@10dB", 0) == 0);
    const auto le = call({"analyze", "--code", "qpsk4_m4_paper", "--antennas-rx", "2", "--max-event-len", "3"});
    CHECK(le.code == 0);
    CHECK(le.out.find("# criterion=log_eig\n") != std::string::npos);
  }

  TEST_CASE("usage errors") {
    const auto bad = call({"analyze", "--code", "nonexistent-name"});
    CHECK(bad.code == sttcaf::cli::kUsage);
    CHECK(bad.err.find("nonexistent-name") != std::string::npos);
    CHECK(bad.out.empty());
    CHECK(call({"search", "--budget", "0"}).code == sttcaf::cli::kUsage);
    CHECK(call({"analyze", "--code", "qpsk4_m2_paper", "--snr-grid", "5,3"}).code == sttcaf::cli::kUsage);
    CHECK(call({"frobnicate"}).code == sttcaf::cli::kUsage);
    CHECK(call({}).code == sttcaf::cli::kUsage);
    CHECK(call({"--help"}).code == 0);
  }

  TEST_CASE("search over the built-in pair") {
    TempDir a("sttcaf_cli_search_a"), b("sttcaf_cli_search_b");
    const std::vector<std::string> base{"search", "--candidate", "qpsk4_m2_tarokh", "--candidate", "qpsk4_m2_paper",
                                        "--antennas-rx", "1", "--max-event-len", "6", "--seed", "3"};
    auto args = base;
    args.insert(args.end(), {"--out", a.path.string()});
    REQUIRE(call(args).code == 0);
    args = base;
    args.insert(args.end(), {"--out", b.path.string()});
    REQUIRE(call(args).code == 0);
    const std::string ranking = slurp(a.path / "ranking.csv");
    CHECK(ranking.rfind("rank,name_or_hash,min_rank,worst_metric,criterion", 0) == 0);
    CHECK(ranking.find("\n1,qpsk4_m2_paper,") != std::string::npos);
    CHECK(ranking == slurp(b.path / "ranking.csv"));
    CHECK(slurp(a.path / "qpsk4_m2_paper.sttc") == slurp(b.path / "qpsk4_m2_paper.sttc"));
    const auto manifest = nlohmann::json::parse(slurp(a.path / "manifest.json"));
    CHECK(manifest["command"] == "search");
    CHECK(manifest["seed"] == 3);
    CHECK(manifest["tool_version"] == "0.1.0");
    CHECK(manifest.contains("timestamp"));
  }

  TEST_CASE("simulate writes CSV and manifest, replay reproduces it") {
    TempDir d("sttcaf_cli_sim");
    const std::string out = (d.path / "sim.csv").string();
    REQUIRE(call({"simulate", "--code", "qpsk4_m2_paper", "--antennas-rx", "1", "--snr-grid", "0:4:12", "--frames",
                  "300", "--target-errors", "50", "--frame-len", "20", "--out", out, "--seed", "9"})
                .code == 0);
    const std::string first = slurp(out);
    CHECK(first.find("# slope=") != std::string::npos);
    const std::string manifest = out + ".manifest.json";
    REQUIRE(fs::exists(manifest));
    const std::string again = (d.path / "again.csv").string();
    CHECK(call({"replay", manifest, "--out", again, "--threads", "3"}).code == 0);
    CHECK(slurp(again) == first);
    CHECK(fs::exists(again + ".manifest.json"));
  }

  TEST_CASE("list-codes replays with a thread override") {
    TempDir d("sttcaf_cli_list");
    const std::string out = (d.path / "codes.csv").string();
    REQUIRE(call({"list-codes", "--out", out}).code == 0);
    const std::string again = (d.path / "again.csv").string();
    CHECK(call({"replay", out + ".manifest.json", "--out", again, "--threads", "2"}).code == 0);
    CHECK(slurp(again) == slurp(out));
  }

  TEST_CASE("noiseless simulation has an all-zero BER column") {
    const auto r = call({"simulate", "--code", "qpsk4_m2_tarokh", "--noiseless", "--frames", "50", "--snr-grid",
                         "0:4:12", "--frame-len", "10"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line) && line[0] != '#') {
      std::vector<std::string> f;
      std::stringstream ss(line);
      for (std::string x; std::getline(ss, x, ',');) f.push_back(x);
      REQUIRE(f.size() == 7);
      CHECK(f[3] == "0");
      ++rows;
    }
    CHECK(rows == 4);
  }

  TEST_CASE("analyze accepts catalog files and records them") {
    TempDir d("sttcaf_cli_catalog");
    const auto cat = d.path / "mine.sttc";
    {
      std::ofstream f(cat);
      f << "2 4 4\n00 20 02 22\n01 21 03 23\n11 31 13 33\n12 32 10 30\n";
    }
    const std::string out = (d.path / "a.csv").string();
    REQUIRE(call({"analyze", "--code", cat.string(), "--antennas-rx", "1", "--max-event-len", "3", "--out", out})
                .code == 0);
    const auto m = nlohmann::json::parse(slurp(out + ".manifest.json"));
    CHECK(m["command"] == "analyze");
    CHECK(m["params"]["code"] == cat.string());
    CHECK(slurp(out).find("# code=mine ") != std::string::npos);
  }
}
