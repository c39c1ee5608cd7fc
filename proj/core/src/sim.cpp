// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include "sttcaf/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "sttcaf/csv.hpp"
#include "sttcaf/parallel.hpp"
#include "sttcaf/random.hpp"

namespace sttcaf {

namespace {

struct FrameOutcome {
  std::uint64_t bit_errors = 0;
  bool frame_error = false;
};

std::uint64_t snr_stream(double snr_db) {
  std::uint64_t bits = 0;
  std::memcpy(&bits, &snr_db, sizeof bits);
  return mix64(bits);
}

FrameOutcome simulate_frame(const SimConfig& cfg, const RelayLinkConfig& link, double snr_db, std::uint64_t frame) {
  const TrellisCode& code = cfg.code;
  Rng rng = make_rng(cfg.seed, snr_stream(snr_db), frame);
  const ChannelSample ch = sample_channel(link, rng);

  std::vector<int> inputs(static_cast<std::size_t>(cfg.frame_len));
  int state = 0;
  for (auto& u : inputs) {
    u = static_cast<int>(rng() % static_cast<std::uint64_t>(code.num_inputs()));
    state = code.branch(state, u).next_state;
  }
  const auto tail = code.termination_inputs(state);
  std::vector<int> full = inputs;
  full.insert(full.end(), tail.begin(), tail.end());

  const CMatrix y = transmit_frame(encode(code, full, 0), ch, link, rng);
  const auto decoded = viterbi_decode(code, y, ch, link, cfg.decoder_noise_model);

  FrameOutcome out;
  for (std::size_t t = 0; t < inputs.size(); ++t)
    out.bit_errors += static_cast<std::uint64_t>(
        std::popcount(static_cast<unsigned>(inputs[t] ^ decoded[t])));
  out.frame_error = out.bit_errors > 0;
  return out;
}

}  // namespace

void SimConfig::validate() const {
  link.validate();
  if (frame_len < 10) throw std::invalid_argument("SimConfig: frame_len must be >= 10");
  if (target_frame_errors < 50) throw std::invalid_argument("SimConfig: target_frame_errors must be >= 50");
  if (max_frames == 0) throw std::invalid_argument("SimConfig: max_frames must be positive");
  for (std::size_t i = 1; i < snr_grid_db.size(); ++i)
    if (!(snr_grid_db[i] > snr_grid_db[i - 1]))
      throw std::invalid_argument("SimConfig: SNR grid must be strictly increasing");
  if (!std::has_single_bit(static_cast<unsigned>(code.num_inputs())))
    throw std::invalid_argument("SimConfig: alphabet size must be a power of two");
  if (link.source_antennas != code.antennas())
    throw std::invalid_argument("SimConfig: link source antennas differ from the code's");
}

double BerPoint::ci95_fer() const {
  if (frames == 0) return 1.0;
  if (frame_errors == 0) return 3.0 / static_cast<double>(frames);
  return 1.96 * std::sqrt(fer * (1.0 - fer) / static_cast<double>(frames));
}

BerPoint run_point(const SimConfig& cfg, double snr_db) {
  cfg.validate();
  const TrellisCode& code = cfg.code;
  RelayLinkConfig link = link_for_snr(code.antennas(), cfg.link.dest_antennas, snr_db, cfg.link.relay_gain);
  if (cfg.noiseless) {
    link.relay_noise_var = 0.0;
    link.dest_noise_var = 0.0;
  }
  (void)code.termination_length();  // throws on unterminable codes

  BerPoint pt;
  pt.snr_db = snr_db;
  pt.bits_per_frame = static_cast<std::uint64_t>(cfg.frame_len) *
                      static_cast<std::uint64_t>(std::bit_width(static_cast<unsigned>(code.num_inputs())) - 1);

  const unsigned threads = cfg.threads == 0 ? default_thread_count() : cfg.threads;
  const std::uint64_t batch = std::max<std::uint64_t>(64, 16ULL * threads);
  std::vector<FrameOutcome> outcomes;

  std::uint64_t next_frame = 0;
  bool stop = false;
  while (!stop && next_frame < cfg.max_frames) {
    const std::uint64_t n = std::min(batch, cfg.max_frames - next_frame);
    outcomes.assign(static_cast<std::size_t>(n), FrameOutcome{});
    parallel_for(
        static_cast<std::size_t>(n),
        [&](std::size_t i) { outcomes[i] = simulate_frame(cfg, link, snr_db, next_frame + i); },
        threads);
    // Consume in frame order so the stopping frame is schedule independent.
    for (const auto& o : outcomes) {
      ++pt.frames;
      pt.bit_errors += o.bit_errors;
      pt.frame_errors += o.frame_error ? 1 : 0;
      if (pt.frame_errors >= cfg.target_frame_errors) {
        stop = true;
        break;
      }
    }
    next_frame += n;
  }

  const double nbits = static_cast<double>(pt.frames * pt.bits_per_frame);
  pt.ber = static_cast<double>(pt.bit_errors) / nbits;
  pt.fer = static_cast<double>(pt.frame_errors) / static_cast<double>(pt.frames);
  pt.ci95_ber = pt.bit_errors == 0 ? 3.0 / nbits : 1.96 * std::sqrt(pt.ber * (1.0 - pt.ber) / nbits);
  return pt;
}

SlopeFit fit_diversity(std::span<const BerPoint> points) {
  std::vector<double> xs, ys;
  for (const auto& p : points)
    if (p.ber > 0.0) {
      xs.push_back(p.snr_db / 10.0);
      ys.push_back(-std::log10(p.ber));
    }
  if (xs.size() < 3) throw std::domain_error("fit_diversity: need at least 3 points with nonzero BER");

  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::domain_error("fit_diversity: points share one SNR");

  SlopeFit fit;
  fit.slope = sxy / sxx;
  const double intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (intercept + fit.slope * xs[i]);
    rss += r * r;
  }
  fit.residual = std::sqrt(rss / n);
  fit.fit_range_db = {10.0 * *std::min_element(xs.begin(), xs.end()), 10.0 * *std::max_element(xs.begin(), xs.end())};
  fit.points = static_cast<int>(xs.size());
  return fit;
}

SimResult sweep(const SimConfig& cfg) {
  cfg.validate();
  const auto& grid = cfg.snr_grid_db;
  if (grid.size() < 4 || grid.back() - grid.front() < 12.0)
    throw std::invalid_argument("sweep: grid needs at least 4 points spanning at least 12 dB");

  SimResult result;
  for (double snr : grid) result.points.push_back(run_point(cfg, snr));

  std::vector<BerPoint> nonzero;
  for (const auto& p : result.points)
    if (p.ber > 0.0) nonzero.push_back(p);
  if (nonzero.size() < 3) {
    result.slope_note = "unavailable (fewer than 3 nonzero-BER points)";
    return result;
  }
  const std::size_t take = std::max<std::size_t>(3, (nonzero.size() + 1) / 2);
  result.slope = fit_diversity(std::span<const BerPoint>(nonzero).last(take));
  return result;
}

std::string sweep_csv(const SimResult& result) {
  std::string out = csv_row({"snr_db", "frames", "bit_errors", "ber", "ci95_ber", "frame_errors", "fer"});
  for (const auto& p : result.points)
    out += csv_row({format_double(p.snr_db), std::to_string(p.frames), std::to_string(p.bit_errors),
                    format_double(p.ber), format_double(p.ci95_ber), std::to_string(p.frame_errors),
                    format_double(p.fer)});
  if (result.slope) {
    out += "# slope=" + format_double(result.slope->slope) + " range=" + format_double(result.slope->fit_range_db.first) +
           "-" + format_double(result.slope->fit_range_db.second) + "dB residual=" +
           format_double(result.slope->residual) + "\n";
  } else {
    out += "# slope=" + result.slope_note + "\n";
  }
  return out;
}

}  // namespace sttcaf
