#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "delcode/bitstring.hpp"
#include "delcode/params.hpp"

namespace delcode {

// Exact (unreduced) position-weighted sums over the 1-bits.
struct PositionSketch {
  std::uint64_t f1 = 0;  // sum of i * x_i
  std::uint64_t f2 = 0;  // sum of C(i,2) * x_i

  bool operator==(const PositionSketch&) const = default;
};

// Exact sums over the rank sequence r_1..r_{n+1}.  f3r can exceed 64 bits
// near n = 2^20 (it grows like n^4/24), hence the wider accumulator.
struct RunSketch {
  std::uint64_t f1r = 0;       // sum of r_i
  std::uint64_t f2r = 0;       // sum of C(r_i,2)
  unsigned __int128 f3r = 0;   // sum of C(r_i,3)
  std::uint32_t runs = 0;      // r_{n+1}

  bool operator==(const RunSketch&) const = default;
};

struct CountSketch {
  std::uint8_t ones_mod3 = 0;
  std::uint8_t runs_mod5 = 0;

  bool operator==(const CountSketch&) const = default;
};

enum class BlockDivision : std::uint8_t { aligned = 1, straddling = 2 };

// XOR over all blocks of one division of the exact per-block f2r and f3r,
// stored in the fixed widths from BlockParams.
struct BlockSketch {
  BlockDivision division = BlockDivision::aligned;
  std::uint16_t width2 = 0;
  std::uint16_t width3 = 0;
  std::uint64_t f2r_xor = 0;
  std::uint64_t f3r_xor = 0;

  bool operator==(const BlockSketch&) const = default;
};

// All modular sketch data one variant transmits.  Fields whose modulus (or
// flag) is absent in params stay at their zero defaults, so whole-bundle
// equality is meaningful for same-variant comparison.
struct SketchBundle {
  CodeParams params;
  std::uint64_t f1 = 0;
  std::uint64_t f2 = 0;
  std::uint64_t f1r = 0;
  std::uint64_t f2r = 0;
  std::uint8_t ones3 = 0;
  std::uint8_t runs5 = 0;
  std::optional<std::pair<BlockSketch, BlockSketch>> blocks;

  bool operator==(const SketchBundle&) const = default;
};

PositionSketch position_sketch(const BitString& x);
RunSketch run_sketch(const BitString& x);
CountSketch count_sketch(const BitString& x);

// Both divisions for the given geometry: aligned blocks of length L from
// position 1, and the same blocking applied after a virtual zero-prefix of
// L/2.  Short or trailing blocks are zero-padded to full length.
std::pair<BlockSketch, BlockSketch> block_sketches(const BitString& x,
                                                   const CodeParams& params);

// The full sketch for params.variant; |x| must equal params.n.
SketchBundle bundle(const BitString& x, const CodeParams& params);

// Byte-level serialization (versioned field list; see docs/formats.md).
std::vector<std::uint8_t> serialize_bundle(const SketchBundle& b);
SketchBundle parse_bundle(const std::vector<std::uint8_t>& bytes);

// Bit-level serialization used inside codewords: fixed widths and field
// order derived from params, params.bundle_bits() bits total.
std::vector<std::uint8_t> bundle_to_bits(const SketchBundle& b);
SketchBundle bundle_from_bits(const std::vector<std::uint8_t>& bits,
                              const CodeParams& params);

}  // namespace delcode
