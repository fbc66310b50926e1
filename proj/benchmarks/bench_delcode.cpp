#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "delcode/codec.hpp"
#include "delcode/decode2_list.hpp"
#include "delcode/decode2_unique.hpp"
#include "delcode/regular.hpp"
#include "delcode/sketch.hpp"

using namespace delcode;

namespace {

BitString random_regular(std::mt19937_64& rng, std::size_t n) {
  RegularCodebook cb(n);
  BigInt idx = 0;
  for (int limb = 0; limb < 5; ++limb) idx = (idx << 64) | BigInt(rng());
  return cb.encode(idx % cb.capacity());
}

std::vector<std::size_t> two_positions(std::mt19937_64& rng, std::size_t n) {
  std::size_t a = rng() % n + 1, b = rng() % n + 1;
  while (b == a) b = rng() % n + 1;
  if (a > b) std::swap(a, b);
  return {a, b};
}

void BM_bundle(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  auto prm = CodeParams::make(n, SketchVariant::unique2);
  std::mt19937_64 rng(1);
  auto x = random_regular(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(bundle(x, prm));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_bundle)->Arg(256)->Arg(1024)->Arg(4096);

void BM_decode_unique2(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  auto prm = CodeParams::make(n, SketchVariant::unique2);
  std::mt19937_64 rng(2);
  // a pool of prepared instances so the loop measures decoding only
  std::vector<std::pair<BitString, SketchBundle>> pool;
  for (int i = 0; i < 64; ++i) {
    auto x = random_regular(rng, n);
    pool.emplace_back(x.erased(two_positions(rng, n)), bundle(x, prm));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [y, b] = pool[i++ % pool.size()];
    benchmark::DoNotOptimize(decode_unique2(y, b));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_decode_unique2)->Arg(256)->Arg(1024)->Arg(4096);

void BM_decode_list2(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  auto prm = CodeParams::make(n, SketchVariant::list2);
  std::mt19937_64 rng(3);
  std::vector<std::pair<BitString, SketchBundle>> pool;
  for (int i = 0; i < 64; ++i) {
    auto x = random_regular(rng, n);
    pool.emplace_back(x.erased(two_positions(rng, n)), bundle(x, prm));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [y, b] = pool[i++ % pool.size()];
    benchmark::DoNotOptimize(decode_list2(y, b));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_decode_list2)->Arg(256)->Arg(1024)->Arg(4096);

void BM_codec_roundtrip(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  auto prm = CodeParams::make(n, SketchVariant::unique2);
  std::mt19937_64 rng(4);
  RegularCodebook cb(n);
  BigInt idx = 0;
  for (int limb = 0; limb < 5; ++limb) idx = (idx << 64) | BigInt(rng());
  idx %= cb.capacity();
  auto cw = encode_message(idx, prm).assembled();
  std::vector<BitString> received;
  for (int i = 0; i < 64; ++i)
    received.push_back(cw.erased(two_positions(rng, cw.size())));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode_codeword(received[i++ % received.size()], prm));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_codec_roundtrip)->Arg(64)->Arg(256)->Arg(1024);

void BM_reg_encode(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  RegularCodebook cb(n);
  std::mt19937_64 rng(5);
  std::vector<BigInt> indices;
  for (int i = 0; i < 64; ++i) {
    BigInt idx = 0;
    for (int limb = 0; limb < 5; ++limb) idx = (idx << 64) | BigInt(rng());
    indices.push_back(idx % cb.capacity());
  }
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(cb.encode(indices[i++ % indices.size()]));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_reg_encode)->Arg(256)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
