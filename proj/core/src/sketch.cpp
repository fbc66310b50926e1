#include "delcode/sketch.hpp"

#include <stdexcept>

#include "delcode/rank.hpp"
#include "delcode/result.hpp"

namespace delcode {

PositionSketch position_sketch(const BitString& x) {
  PositionSketch s;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    if (x.bit(static_cast<long long>(i))) {
      s.f1 += i;
      s.f2 += detail::binom2(i);
    }
  }
  return s;
}

RunSketch run_sketch(const BitString& x) {
  RunSketch s;
  std::uint32_t r = 0;
  int prev = 0;
  for (std::size_t i = 1; i <= x.size() + 1; ++i) {
    int cur = x.bit(static_cast<long long>(i));
    if (cur != prev) ++r;
    prev = cur;
    s.f1r += r;
    s.f2r += detail::binom2(r);
    s.f3r += detail::binom3(r);
  }
  s.runs = r;
  return s;
}

CountSketch count_sketch(const BitString& x) {
  CountSketch c;
  c.ones_mod3 = static_cast<std::uint8_t>(x.count_ones() % 3);
  c.runs_mod5 = static_cast<std::uint8_t>(RankSequence::of(x).runs() % 5);
  return c;
}

namespace {

// f2r/f3r of one block, zero-padded to params length, under the block's own
// boundary convention.  Per-block ranks stay below L+2 so u64 suffices.
std::pair<std::uint64_t, std::uint64_t> padded_block_run_sums(
    const BitString& x, long long from, std::uint32_t len, long long prefix_zeros) {
  // Bits of the block: positions from..from+len-1 of the virtual string
  // (zero-prefix of prefix_zeros, then x, then zero padding).
  auto bit_at = [&](long long p) -> int {
    long long xp = p - prefix_zeros;
    if (xp < 1 || xp > static_cast<long long>(x.size())) return 0;
    return x.bit(xp);
  };
  std::uint64_t f2r = 0, f3r = 0;
  std::uint32_t r = 0;
  int prev = 0;
  for (std::uint32_t i = 0; i <= len; ++i) {
    int cur = i < len ? bit_at(from + i) : 1;  // terminating boundary one
    if (cur != prev) ++r;
    prev = cur;
    f2r += detail::binom2(r);
    f3r += detail::binom3(r);
  }
  return {f2r, f3r};
}

BlockSketch division_sketch(const BitString& x, const BlockParams& bp,
                            BlockDivision div) {
  BlockSketch s;
  s.division = div;
  s.width2 = static_cast<std::uint16_t>(bp.width2);
  s.width3 = static_cast<std::uint16_t>(bp.width3);
  const long long prefix = div == BlockDivision::aligned ? 0 : bp.length / 2;
  const std::uint32_t count =
      div == BlockDivision::aligned ? bp.count1 : bp.count2;
  for (std::uint32_t b = 0; b < count; ++b) {
    auto [f2r, f3r] = padded_block_run_sums(
        x, 1 + static_cast<long long>(b) * bp.length, bp.length, prefix);
    s.f2r_xor ^= f2r;
    s.f3r_xor ^= f3r;
  }
  return s;
}

}  // namespace

std::pair<BlockSketch, BlockSketch> block_sketches(const BitString& x,
                                                   const CodeParams& params) {
  if (!params.blocks)
    throw std::invalid_argument("block_sketches: params carry no block geometry");
  if (x.size() != params.n)
    throw std::invalid_argument("block_sketches: |x| != params.n");
  return {division_sketch(x, *params.blocks, BlockDivision::aligned),
          division_sketch(x, *params.blocks, BlockDivision::straddling)};
}

SketchBundle bundle(const BitString& x, const CodeParams& params) {
  if (x.size() != params.n)
    throw std::invalid_argument("bundle: |x| != params.n");
  SketchBundle b;
  b.params = params;
  if (params.mod_f1 || params.mod_f2) {
    auto p = position_sketch(x);
    if (params.mod_f1) b.f1 = p.f1 % params.mod_f1;
    if (params.mod_f2) b.f2 = p.f2 % params.mod_f2;
  }
  if (params.mod_f1r || params.mod_f2r) {
    auto r = run_sketch(x);
    if (params.mod_f1r) b.f1r = r.f1r % params.mod_f1r;
    if (params.mod_f2r) b.f2r = r.f2r % params.mod_f2r;
  }
  if (params.has_ones3 || params.has_runs5) {
    auto c = count_sketch(x);
    if (params.has_ones3) b.ones3 = c.ones_mod3;
    if (params.has_runs5) b.runs5 = c.runs_mod5;
  }
  if (params.blocks) b.blocks = block_sketches(x, params);
  return b;
}

}  // namespace delcode
