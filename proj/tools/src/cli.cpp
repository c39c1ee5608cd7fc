// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "manifest.hpp"
#include "sttcaf/csv.hpp"
#include "sttcaf/design.hpp"
#include "sttcaf/error.hpp"
#include "sttcaf/events.hpp"
#include "sttcaf/model.hpp"
#include "sttcaf/pep.hpp"
#include "sttcaf/search.hpp"
#include "sttcaf/sim.hpp"
#include "sttcaf/trellis.hpp"
#include "sttcaf/viterbi.hpp"

namespace sttcaf::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::uint64_t seed = 1;
  std::string out;
  std::string code;
  int antennas_rx = 2;
  int max_event_len = 0;  // 0: default_max_event_len(M)
  unsigned threads = 0;
};

struct AnalyzeOpts {
  std::string snr_grid = "10:5:30";
};

struct SearchOpts {
  int antennas_tx = 2;
  int states = 4;
  int inputs = 4;
  std::string mode = "random";
  std::uint64_t budget = 100'000;
  std::size_t top_k = 10;
  std::vector<std::string> candidates;
  bool first_row_identity = true;
  bool distinct_rows = true;
  bool additive = false;
};

struct SimulateOpts {
  std::string snr_grid = "8:3:26";
  int frame_len = 100;
  std::uint64_t max_frames = 100'000;
  std::uint64_t target_errors = 100;
  std::string noise_model = "exact_whitened";
  double relay_gain = 1.0;
  bool noiseless = false;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed for " + path);
}

std::string num(double x) { return format_double(x); }

int effective_max_len(const Common& c, int M) {
  return c.max_event_len > 0 ? c.max_event_len : default_max_event_len(M);
}

void add_common(CLI::App* cmd, Common& c, bool with_code) {
  cmd->add_option("--seed", c.seed, "Master seed")->capture_default_str();
  cmd->add_option("--out", c.out, "Output path");
  if (with_code) cmd->add_option("--code", c.code, "Built-in name or catalog file")->required();
  cmd->add_option("--antennas-rx", c.antennas_rx, "Destination antennas N")
      ->capture_default_str()
      ->check(CLI::Range(1, 16));
  cmd->add_option("--max-event-len", c.max_event_len, "Longest error event (0: 8 for M<=2, else 4)")
      ->check(CLI::Range(0, 16));
  cmd->add_option("--threads", c.threads, "Worker threads (0: STTC_AF_THREADS or hardware)");
}

std::vector<std::string> common_args(const Common& c, bool with_code) {
  std::vector<std::string> a{"--seed", std::to_string(c.seed), "--antennas-rx", std::to_string(c.antennas_rx),
                             "--max-event-len", std::to_string(c.max_event_len)};
  if (with_code) a.insert(a.end(), {"--code", c.code});
  if (!c.out.empty()) a.insert(a.end(), {"--out", c.out});
  return a;
}

RunManifest base_manifest(const std::string& command, const Common& c, bool with_code) {
  RunManifest m;
  m.command = command;
  m.args = common_args(c, with_code);
  m.args.insert(m.args.begin(), command);
  m.seed = c.seed;
  m.tool_version = kToolVersion;
  m.timestamp = utc_timestamp();
  m.params["seed"] = c.seed;
  m.params["antennas_rx"] = c.antennas_rx;
  m.params["max_event_len"] = c.max_event_len;
  if (with_code) m.params["code"] = c.code;
  return m;
}

// Writes text to --out (plus manifest) or to the output stream.
void emit(const std::string& text, RunManifest m, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  write_file(out_path, text);
  m.outputs = {out_path};
  write_manifest(m, out_path + ".manifest.json");
}

int cmd_list_codes(const Common& c, std::ostream& out) {
  std::string text = csv_row({"name", "antennas", "states", "inputs", "table_hash", "labels"});
  for (const auto& code : builtin_codes()) {
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(code.table_hash()));
    std::string rows = label_rows(code);
    std::replace(rows.begin(), rows.end(), '\n', ';');
    if (!rows.empty() && rows.back() == ';') rows.pop_back();
    text += csv_row({code.name(), std::to_string(code.antennas()), std::to_string(code.num_states()),
                     std::to_string(code.num_inputs()), hash, rows});
  }
  RunManifest m;
  m.command = "list-codes";
  m.args = {"list-codes"};
  if (!c.out.empty()) m.args.insert(m.args.end(), {"--out", c.out});
  m.seed = c.seed;
  m.tool_version = kToolVersion;
  m.timestamp = utc_timestamp();
  emit(text, m, c.out, out);
  return kOk;
}

int cmd_analyze(const Common& c, const AnalyzeOpts& o, std::ostream& out) {
  const TrellisCode code = resolve_code(c.code);
  const std::vector<double> grid = parse_grid(o.snr_grid);
  if (grid.empty()) throw UsageError("analyze: empty SNR grid");
  const int M = code.antennas();
  const int N = c.antennas_rx;
  const int max_len = effective_max_len(c, M);

  const auto classes = event_classes(code, max_len);
  const CodeAssessment assessment = assess_events(classes, M, N);
  std::vector<double> es_n0;
  for (double snr : grid) es_n0.push_back(symbol_snr(snr, M));

  std::vector<std::string> header{"event_id", "L", "multiplicity", "weight", "rank"};
  for (int i = 1; i <= M; ++i) header.push_back("lambda_" + std::to_string(i));
  header.push_back("metric");
  for (double snr : grid) header.push_back("craig@" + num(snr) + "dB");
  for (double snr : grid) header.push_back("chernoff@" + num(snr) + "dB");
  std::string text = csv_row(header);

  for (std::size_t e = 0; e < assessment.events.size(); ++e) {
    const EventMetric& ev = assessment.events[e];
    std::vector<std::string> row{std::to_string(e), std::to_string(ev.length), std::to_string(ev.pair_count),
                                 num(ev.probability), std::to_string(ev.spectrum.rank)};
    for (int i = 0; i < M; ++i)
      row.push_back(i < static_cast<int>(ev.spectrum.lambdas.size()) ? num(ev.spectrum.lambdas[static_cast<std::size_t>(i)])
                                                                     : "0");
    row.push_back(ev.excluded ? "" : num(ev.metric));
    std::vector<std::string> chern;
    for (double x : es_n0) {
      const PepEstimate p = pep(ev.spectrum, N, x);
      row.push_back(num(p.craig));
      chern.push_back(num(p.chernoff));
    }
    row.insert(row.end(), chern.begin(), chern.end());
    text += csv_row(row);
  }

  const DesignScore& s = assessment.score;
  text += "# code=" + code.name() + " M=" + std::to_string(M) + " N=" + std::to_string(N) +
          " max_event_len=" + std::to_string(max_len) + "\n";
  text += "# criterion=" + std::string(to_string(s.criterion)) + "\n";
  text += "# min_rank=" + std::to_string(s.min_rank) + "\n";
  text += "# worst_metric=" + num(s.worst_metric) + "\n";
  text += "# tie_break=" + num(s.tie_break) + "\n";
  text += "# num_events=" + std::to_string(s.num_events) + "\n";
  text += std::string("# full_diversity=") + (s.full_diversity ? "true" : "false") + "\n";
  for (std::size_t i = 0; i < grid.size(); ++i)
    text += "# union_bound@" + num(grid[i]) + "dB=" + num(union_bound(classes, N, es_n0[i])) + "\n";

  RunManifest m = base_manifest("analyze", c, true);
  m.args.insert(m.args.end(), {"--snr-grid", o.snr_grid});
  m.params["snr_grid"] = o.snr_grid;
  m.params["table_hash"] = code.table_hash();
  emit(text, m, c.out, out);
  return kOk;
}

int cmd_search(const Common& c, const SearchOpts& o, std::ostream& out) {
  SearchSpace space;
  space.antennas = o.antennas_tx;
  space.num_states = o.states;
  space.num_inputs = o.inputs;
  if (o.mode == "random") {
    space.mode = SearchMode::random;
  } else if (o.mode == "exhaustive") {
    space.mode = SearchMode::exhaustive;
  } else {
    throw UsageError("search: --mode must be random or exhaustive");
  }
  space.budget = o.budget;
  space.constraints.first_row_identity = o.first_row_identity;
  space.constraints.distinct_rows = o.distinct_rows;
  space.constraints.additive = o.additive;
  for (const auto& ref : o.candidates) space.candidates.push_back(resolve_code(ref));
  if (!space.candidates.empty()) space.antennas = space.candidates.front().antennas();
  if (space.budget == 0) throw UsageError("search: --budget must be positive");
  space.validate();

  const int max_len = effective_max_len(c, space.antennas);
  const auto ranked = search_codes(space, c.antennas_rx, max_len, c.seed, o.top_k, c.threads);

  const std::string dir = c.out.empty() ? std::string("search_out") : c.out;
  fs::create_directories(dir);
  std::string text = csv_row({"rank", "name_or_hash", "min_rank", "worst_metric", "criterion", "tie_break",
                              "candidate_index"});
  std::vector<std::string> outputs{(fs::path(dir) / "ranking.csv").string()};
  for (const auto& r : ranked) {
    text += csv_row({std::to_string(r.rank_position), r.code.name(), std::to_string(r.score.min_rank),
                     num(r.score.worst_metric), std::string(to_string(r.score.criterion)), num(r.score.tie_break),
                     std::to_string(r.candidate_index)});
    const std::string cat = (fs::path(dir) / (r.code.name() + ".sttc")).string();
    write_file(cat, format_catalog(r.code));
    outputs.push_back(cat);
  }
  write_file(outputs.front(), text);

  Common cc = c;
  cc.out = dir;
  RunManifest m = base_manifest("search", cc, false);
  m.args.insert(m.args.end(), {"--antennas-tx", std::to_string(o.antennas_tx), "--states", std::to_string(o.states),
                               "--inputs", std::to_string(o.inputs), "--mode", o.mode, "--budget",
                               std::to_string(o.budget), "--top-k", std::to_string(o.top_k)});
  if (!o.first_row_identity) m.args.push_back("--free-first-row");
  if (!o.distinct_rows) m.args.push_back("--allow-repeated-rows");
  if (o.additive) m.args.push_back("--additive");
  for (const auto& ref : o.candidates) m.args.insert(m.args.end(), {"--candidate", ref});
  m.params["antennas_tx"] = space.antennas;
  m.params["states"] = o.states;
  m.params["inputs"] = o.inputs;
  m.params["mode"] = o.mode;
  m.params["budget"] = o.budget;
  m.params["top_k"] = o.top_k;
  m.params["first_row_identity"] = o.first_row_identity;
  m.params["distinct_rows"] = o.distinct_rows;
  m.params["additive"] = o.additive;
  m.params["candidates"] = o.candidates;
  m.outputs = outputs;
  write_manifest(m, (fs::path(dir) / "manifest.json").string());
  out << "wrote " << ranked.size() << " ranked codes to " << dir << "\n";
  return kOk;
}

int cmd_simulate(const Common& c, const SimulateOpts& o, std::ostream& out) {
  SimConfig cfg;
  cfg.code = resolve_code(c.code);
  cfg.link.source_antennas = cfg.code.antennas();
  cfg.link.dest_antennas = c.antennas_rx;
  cfg.link.relay_gain = o.relay_gain;
  cfg.frame_len = o.frame_len;
  cfg.snr_grid_db = parse_grid(o.snr_grid);
  cfg.max_frames = o.max_frames;
  cfg.target_frame_errors = o.target_errors;
  cfg.decoder_noise_model = parse_noise_model(o.noise_model);
  cfg.seed = c.seed;
  cfg.noiseless = o.noiseless;
  cfg.threads = c.threads;
  cfg.validate();

  const SimResult result = sweep(cfg);
  const std::string text = sweep_csv(result);

  RunManifest m = base_manifest("simulate", c, true);
  m.args.insert(m.args.end(), {"--snr-grid", o.snr_grid, "--frame-len", std::to_string(o.frame_len), "--frames",
                               std::to_string(o.max_frames), "--target-errors", std::to_string(o.target_errors),
                               "--noise-model", std::string(to_string(cfg.decoder_noise_model)), "--relay-gain",
                               num(o.relay_gain)});
  if (o.noiseless) m.args.push_back("--noiseless");
  m.params["snr_grid"] = o.snr_grid;
  m.params["frame_len"] = o.frame_len;
  m.params["max_frames"] = o.max_frames;
  m.params["target_frame_errors"] = o.target_errors;
  m.params["noise_model"] = std::string(to_string(cfg.decoder_noise_model));
  m.params["relay_gain"] = o.relay_gain;
  m.params["noiseless"] = o.noiseless;
  m.params["table_hash"] = cfg.code.table_hash();
  emit(text, m, c.out, out);
  return kOk;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, int depth);

int cmd_replay(const std::string& path, const std::string& out_override, unsigned threads, std::ostream& out,
               std::ostream& err, int depth) {
  if (depth > 0) throw UsageError("replay: a manifest cannot replay another replay");
  RunManifest m = read_manifest(path);
  if (m.args.empty() || m.args.front() != m.command) throw UsageError("replay: manifest args do not match command");
  std::vector<std::string> args = m.args;
  if (!out_override.empty()) {
    auto it = std::find(args.begin(), args.end(), "--out");
    if (it != args.end() && it + 1 != args.end()) {
      *(it + 1) = out_override;
    } else {
      args.insert(args.end(), {"--out", out_override});
    }
  }
  // list-codes has no worker pool
  if (threads != 0 && m.command != "list-codes") args.insert(args.end(), {"--threads", std::to_string(threads)});
  return dispatch(args, out, err, depth + 1);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, int depth) {
  CLI::App app{"Space-time trellis codes over amplify-and-forward relay links", "sttc-af"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Common common;
  AnalyzeOpts aopt;
  SearchOpts sopt;
  SimulateOpts mopt;
  std::string replay_path, replay_out;

  auto* list = app.add_subcommand("list-codes", "List built-in codes");
  list->add_option("--out", common.out, "Output CSV path");
  list->add_option("--seed", common.seed, "Recorded in the manifest");

  auto* analyze = app.add_subcommand("analyze", "Event spectra, PEP bounds and design score of a code");
  add_common(analyze, common, true);
  analyze->add_option("--snr-grid", aopt.snr_grid, "SNR grid in dB, list or start:step:stop")->capture_default_str();

  auto* search = app.add_subcommand("search", "Rank label tables by the design criterion");
  add_common(search, common, false);
  search->add_option("--antennas-tx", sopt.antennas_tx, "Transmit antennas M")->capture_default_str()->check(
      CLI::Range(1, 8));
  search->add_option("--states", sopt.states, "Trellis states")->capture_default_str();
  search->add_option("--inputs", sopt.inputs, "Inputs per state (alphabet size)")->capture_default_str();
  search->add_option("--mode", sopt.mode, "random or exhaustive")->capture_default_str();
  search->add_option("--budget", sopt.budget, "Candidates to score")->capture_default_str();
  search->add_option("--top-k", sopt.top_k, "Codes to keep")->capture_default_str();
  search->add_option("--candidate", sopt.candidates, "Explicit candidate (name or file); repeatable");
  search->add_flag("--free-first-row{false}", sopt.first_row_identity, "Do not pin the state-0 input-0 label");
  search->add_flag("--allow-repeated-rows{false}", sopt.distinct_rows, "Allow identical label rows");
  search->add_flag("--additive", sopt.additive, "Only tables with label(s, u) = A(u) + B(s) mod K");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo BER/FER sweep with slope fit");
  add_common(simulate, common, true);
  simulate->add_option("--snr-grid", mopt.snr_grid, "SNR grid in dB")->capture_default_str();
  simulate->add_option("--frame-len", mopt.frame_len, "Information symbols per frame")->capture_default_str();
  simulate->add_option("--frames", mopt.max_frames, "Maximum frames per point")->capture_default_str();
  simulate->add_option("--target-errors", mopt.target_errors, "Stop after this many frame errors")
      ->capture_default_str();
  simulate->add_option("--noise-model", mopt.noise_model, "exact_whitened or paper_white")->capture_default_str();
  simulate->add_option("--relay-gain", mopt.relay_gain, "Relay amplification alpha")->capture_default_str();
  simulate->add_flag("--noiseless", mopt.noiseless, "Disable all noise");

  auto* replay = app.add_subcommand("replay", "Rerun a command from its manifest");
  replay->add_option("manifest", replay_path, "Manifest JSON")->required();
  replay->add_option("--out", replay_out, "Override the recorded output path");
  replay->add_option("--threads", common.threads, "Worker threads");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (*list) return cmd_list_codes(common, out);
  if (*analyze) return cmd_analyze(common, aopt, out);
  if (*search) return cmd_search(common, sopt, out);
  if (*simulate) return cmd_simulate(common, mopt, out);
  return cmd_replay(replay_path, replay_out, common.threads, out, err, depth);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err, 0);
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace sttcaf::cli
