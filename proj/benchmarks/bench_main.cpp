// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#include <benchmark/benchmark.h>

#include <vector>

#include "sttcaf/design.hpp"
#include "sttcaf/events.hpp"
#include "sttcaf/mgf.hpp"
#include "sttcaf/model.hpp"
#include "sttcaf/spectrum.hpp"
#include "sttcaf/trellis.hpp"
#include "sttcaf/viterbi.hpp"

using namespace sttcaf;

namespace {

// range(0) = -log10|s|; large |s| exercises the log-domain fallback
void BM_MgfExact(benchmark::State& st) {
  const Spectrum sp = make_spectrum({0.7, 1.9, 3.1, 5.2});
  double s = -1.0;
  for (int i = 0; i < st.range(0); ++i) s *= 10.0;
  for (auto _ : st) benchmark::DoNotOptimize(mgf_exact(sp, 2, s).value);
}
BENCHMARK(BM_MgfExact)->Arg(0)->Arg(2)->Arg(4)->Arg(6);

void BM_EventClasses(benchmark::State& st) {
  const auto& code = builtin_code("qpsk4_m2_paper");
  for (auto _ : st) benchmark::DoNotOptimize(event_classes(code, static_cast<int>(st.range(0))).size());
}
BENCHMARK(BM_EventClasses)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ScoreCode(benchmark::State& st) {
  const auto& code = builtin_code("qpsk4_m2_paper");
  for (auto _ : st) benchmark::DoNotOptimize(score_code(code, static_cast<int>(st.range(0)), 8).worst_metric);
}
BENCHMARK(BM_ScoreCode)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

// 100-column frame through the (2,2) link, both decoder metrics
void BM_Viterbi(benchmark::State& st) {
  const auto& code = builtin_code("qpsk4_m2_paper");
  const RelayLinkConfig link = link_for_snr(2, 2, 14.0);
  Rng rng = make_rng(7);
  const ChannelSample ch = sample_channel(link, rng);
  std::vector<int> in(100);
  for (std::size_t i = 0; i + 1 < in.size(); ++i) in[i] = static_cast<int>(i % 4);
  in.back() = 0;
  const CMatrix rx = transmit_frame(encode(code, in), ch, link, rng);
  const NoiseModel model = st.range(0) ? NoiseModel::exact_whitened : NoiseModel::paper_white;
  for (auto _ : st) benchmark::DoNotOptimize(viterbi_decode(code, rx, ch, link, model).size());
}
BENCHMARK(BM_Viterbi)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
