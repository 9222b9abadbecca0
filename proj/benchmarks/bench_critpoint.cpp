// Microbenchmarks for the hot paths: scalar kernels, one-point bound
// evaluations on a long code, and single decode/simulation trials on the
// catalog codes used in tests.

#include <benchmark/benchmark.h>

#include "critpoint/block_code.hpp"
#include "critpoint/bounds.hpp"
#include "critpoint/channel.hpp"
#include "critpoint/critical.hpp"
#include "critpoint/logmath.hpp"
#include "critpoint/monte_carlo.hpp"
#include "critpoint/soft_decoders.hpp"
#include "critpoint/spectrum.hpp"

using namespace critpoint;

namespace {

const CodeParams kLong(2040, 1912, 17);

void bm_ln_q(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ln_q(x));
    x = x < 40.0 ? x + 1e-3 : 0.0;
  }
}
BENCHMARK(bm_ln_q);

void bm_union_bound_point(benchmark::State& state) {
  const auto s = random_spectrum(kLong);
  const SnrPoint snr = SnrPoint::from_db(6.0);
  for (auto _ : state) benchmark::DoNotOptimize(union_bound(s, kLong, snr));
}
BENCHMARK(bm_union_bound_point);

void bm_tsb_point(benchmark::State& state) {
  const auto s = random_spectrum(kLong);
  const TsbBound tsb(s, kLong);
  const SnrPoint snr = SnrPoint::from_db(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tsb.evaluate(snr));
}
BENCHMARK(bm_tsb_point)->Arg(4)->Arg(8);

void bm_critical_point(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(critical_point(kLong));
}
BENCHMARK(bm_critical_point);

void bm_decode_bdd(benchmark::State& state) {
  const BlockCode code = BlockCode::from_id("bch_63_45");
  TrialRng rng(1, 0);
  auto word = code.encode(random_message(code, rng));
  word[3] ^= 1;
  word[40] ^= 1;
  for (auto _ : state) benchmark::DoNotOptimize(code.decode_bdd(word));
}
BENCHMARK(bm_decode_bdd);

void bm_chase2(benchmark::State& state) {
  const BlockCode code = BlockCode::from_id("bch_31_21");
  TrialRng rng(2, 0);
  const SoftReceived rx = transmit(code, random_message(code, rng), SnrPoint::from_db(4.0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(chase2_decode(code, rx));
}
BENCHMARK(bm_chase2);

void bm_ml_codebook(benchmark::State& state) {
  const BlockCode code = BlockCode::from_id("bch_15_7");
  const MlCodebook ml(code);
  TrialRng rng(3, 0);
  const SoftReceived rx = transmit(code, random_message(code, rng), SnrPoint::from_db(4.0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(ml.decode(rx));
}
BENCHMARK(bm_ml_codebook);

void bm_mc_trial(benchmark::State& state) {
  const BlockCode code = BlockCode::from_id("bch_31_21");
  const SnrPoint snr = SnrPoint::from_db(5.0);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    TrialRng rng(4, trial++);
    const auto msg = random_message(code, rng);
    const SoftReceived rx = transmit(code, msg, snr, rng);
    benchmark::DoNotOptimize(code.decode_bdd(code.from_bits(hard_decisions(rx))));
  }
}
BENCHMARK(bm_mc_trial);

}  // namespace

BENCHMARK_MAIN();
