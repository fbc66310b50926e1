#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace delcode {

enum class SketchVariant : std::uint8_t {
  vt1 = 0,      // single deletion, position sum
  run1 = 1,     // single deletion, rank sum
  list2 = 2,    // two deletions, list of size <= 2
  unique2 = 3,  // two deletions, unique decoding of regular strings
};

const char* to_string(SketchVariant v);

// Geometry of the two block divisions used by the unique2 variant.
struct BlockParams {
  std::uint32_t length = 0;  // L, always even
  std::uint32_t width2 = 0;  // bits storing one block's exact f2r
  std::uint32_t width3 = 0;  // bits storing one block's exact f3r
  std::uint32_t count1 = 0;  // blocks in the aligned division
  std::uint32_t count2 = 0;  // blocks in the half-shifted division

  bool operator==(const BlockParams&) const = default;
};

// Everything derived deterministically from (n, variant): moduli, the
// regularity constant, block geometry, serialized widths.
struct CodeParams {
  std::size_t n = 0;
  SketchVariant variant = SketchVariant::vt1;
  unsigned d = 7;  // regularity constant

  // Moduli actually carried by this variant; zero means the field is absent.
  std::uint64_t mod_f1 = 0;
  std::uint64_t mod_f2 = 0;
  std::uint64_t mod_f1r = 0;
  std::uint64_t mod_f2r = 0;
  bool has_ones3 = false;
  bool has_runs5 = false;
  std::optional<BlockParams> blocks;

  static CodeParams make(std::size_t n, SketchVariant variant);

  // Total bits of the bit-level bundle serialization (fixed field order).
  std::size_t bundle_bits() const;

  bool operator==(const CodeParams&) const = default;
};

namespace detail {

// Exact integer logarithm helpers; no floating point anywhere so results
// are stable across platforms, including at powers of two.
unsigned ceil_log2_u64(std::uint64_t v);              // v >= 1
unsigned ceil_mul_log2(std::size_t n, unsigned mul);  // ceil(mul * log2 n), n >= 1
unsigned floor_half_mul_log2(std::size_t n, unsigned mul);  // floor(mul/2 * log2 n)

std::uint64_t binom2(std::uint64_t v);
std::uint64_t binom3(std::uint64_t v);
unsigned __int128 binom4_u128(std::uint64_t v);

}  // namespace detail

}  // namespace delcode
