#include "delcode/params.hpp"

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace delcode {

namespace detail {

using boost::multiprecision::cpp_int;

unsigned ceil_log2_u64(std::uint64_t v) {
  if (v == 0) throw std::invalid_argument("ceil_log2_u64: v must be positive");
  if (v == 1) return 0;
  return static_cast<unsigned>(std::bit_width(v - 1));
}

namespace {

// ceil(mul * log2 n) and floor(mul * log2 n) via the bit length of n^mul.
// For p = n^mul: floor(log2 p) = msb(p), and log2 p is an integer exactly
// when p is a power of two.
cpp_int int_pow(std::size_t n, unsigned mul) {
  cpp_int p = 1;
  for (unsigned i = 0; i < mul; ++i) p *= n;
  return p;
}

}  // namespace

unsigned ceil_mul_log2(std::size_t n, unsigned mul) {
  if (n == 0) throw std::invalid_argument("ceil_mul_log2: n must be positive");
  if (n == 1) return 0;
  cpp_int p = int_pow(n, mul);
  unsigned f = static_cast<unsigned>(boost::multiprecision::msb(p));
  bool pow2 = (p == (cpp_int(1) << f));
  return pow2 ? f : f + 1;
}

unsigned floor_half_mul_log2(std::size_t n, unsigned mul) {
  if (n == 0) throw std::invalid_argument("floor_half_mul_log2: n must be positive");
  if (n == 1) return 0;
  cpp_int p = int_pow(n, mul);
  unsigned f = static_cast<unsigned>(boost::multiprecision::msb(p));
  // log2(p)/2 lies in [f/2, (f+1)/2), so its floor is floor(f/2).
  return f / 2;
}

std::uint64_t binom2(std::uint64_t v) { return v < 2 ? 0 : v * (v - 1) / 2; }

std::uint64_t binom3(std::uint64_t v) {
  if (v < 3) return 0;
  // v <= ~2^21 in all callers, so v*(v-1)*(v-2) stays within u64.
  return v * (v - 1) / 2 * (v - 2) / 3;
}

unsigned __int128 binom4_u128(std::uint64_t v) {
  if (v < 4) return 0;
  unsigned __int128 p = static_cast<unsigned __int128>(v) * (v - 1) / 2;
  p = p * (v - 2) / 3;
  p = p * (v - 3) / 4;
  return p;
}

}  // namespace detail

const char* to_string(SketchVariant v) {
  switch (v) {
    case SketchVariant::vt1: return "vt1";
    case SketchVariant::run1: return "run1";
    case SketchVariant::list2: return "list2";
    case SketchVariant::unique2: return "unique2";
  }
  return "?";
}

CodeParams CodeParams::make(std::size_t n, SketchVariant variant) {
  if (n == 0) throw std::invalid_argument("CodeParams: n must be positive");
  CodeParams p;
  p.n = n;
  p.variant = variant;
  const auto nn = static_cast<std::uint64_t>(n);
  switch (variant) {
    case SketchVariant::vt1:
      p.mod_f1 = nn + 1;
      break;
    case SketchVariant::run1:
      p.mod_f1r = 2 * nn + 2;
      break;
    case SketchVariant::list2:
      p.mod_f1r = 4 * nn + 5;
      p.mod_f2r = 2 * nn * nn + 1;
      p.has_runs5 = true;
      break;
    case SketchVariant::unique2: {
      p.mod_f1 = 2 * nn + 1;
      p.mod_f2 = nn * nn + 1;
      p.mod_f1r = 4 * nn + 5;
      p.has_ones3 = true;
      p.has_runs5 = true;
      BlockParams b;
      unsigned L = 2 * detail::ceil_mul_log2(n, p.d);
      if (L < 8) L = 8;
      b.length = L;
      // Exact per-block maxima are hit by the alternating block, whose rank
      // sequence is 1..L+1; the hockey-stick identity gives the sums.
      std::uint64_t max2 = detail::binom3(L + 2);
      auto max3 = detail::binom4_u128(L + 2);
      b.width2 = detail::ceil_log2_u64(max2 + 1);
      b.width3 = detail::ceil_log2_u64(static_cast<std::uint64_t>(max3) + 1);
      b.count1 = static_cast<std::uint32_t>((n + L - 1) / L);
      b.count2 = static_cast<std::uint32_t>((n + L / 2 + L - 1) / L);
      p.blocks = b;
      break;
    }
  }
  return p;
}

std::size_t CodeParams::bundle_bits() const {
  std::size_t bits = 0;
  auto width = [](std::uint64_t mod) {
    return static_cast<std::size_t>(detail::ceil_log2_u64(mod));
  };
  if (mod_f1) bits += width(mod_f1);
  if (mod_f2) bits += width(mod_f2);
  if (mod_f1r) bits += width(mod_f1r);
  if (mod_f2r) bits += width(mod_f2r);
  if (has_ones3) bits += 2;
  if (has_runs5) bits += 3;
  if (blocks) bits += 2 * (blocks->width2 + blocks->width3);
  return bits;
}

}  // namespace delcode
