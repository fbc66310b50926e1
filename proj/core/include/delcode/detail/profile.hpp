#pragma once

#include <cstdint>
#include <vector>

#include "delcode/bitstring.hpp"

namespace delcode::detail {

// Precomputed views of a received string y that let the decoders price any
// insertion pair in O(1): ranks with prefix sums, positions of ones and
// zeros, and per-run gap ranges.
//
// Gap g in 0..m refers to the slot between y_g and y_{g+1} (boundary bits
// included), so an insertion at gap g lands at position g+1.
struct YProfile {
  BitString y;
  std::size_t m = 0;     // |y|
  std::size_t ones = 0;  // w
  std::size_t zeros = 0;
  std::uint32_t runs = 0;  // rank of the terminating boundary, r_{m+1}

  std::vector<std::uint32_t> rank;      // rank[i], i in 0..m+1
  std::vector<std::uint64_t> rank_suf;  // sum of rank[j] for j in i..m+1
  std::vector<std::size_t> ones_upto;   // ones in y_1..y_g, g in 0..m
  std::vector<std::uint64_t> onepos_upto;  // sum of positions of those ones
  std::vector<std::size_t> one_pos;     // 1-based position of k'th one, [0]=0
  std::vector<std::size_t> zero_pos;    // likewise for zeros
  std::vector<std::size_t> run_gap_lo;  // joining-gap range per run index
  std::vector<std::size_t> run_gap_hi;

  std::uint64_t f1 = 0, f2 = 0, f1r = 0, f2r = 0;

  explicit YProfile(BitString y_in);

  std::size_t ones_after(std::size_t g) const { return ones - ones_upto[g]; }
  // Sum of positions of ones in gaps (a, b], i.e. y-positions a+1..b.
  std::uint64_t one_pos_sum(std::size_t a, std::size_t b) const {
    return onepos_upto[b] - onepos_upto[a];
  }
  // Sum of rank[j] for j > g, boundary term included.
  std::uint64_t rank_sum_after(std::size_t g) const { return rank_suf[g + 1]; }
  int bit_ext(long long p) const { return y.bit(p); }
};

// Joint effect of inserting two bits into y: a left event (gap gl, bit bl)
// and a right event (gap gr, bit br), gl <= gr.  When both events name the
// same gap, the left bit ends up immediately before the right bit.
// Positions in the result: left bit at gl+1, right bit at gr+2.
struct PairEffect {
  std::uint32_t runs_left = 0;   // runs created by the left bit (0 or 2)
  std::uint32_t runs_right = 0;  // runs created by the right bit (0 or 2)
  std::uint64_t rank_left = 0;   // final ranks of the inserted bits
  std::uint64_t rank_right = 0;
  std::uint64_t df1 = 0;
  std::uint64_t df2 = 0;
  std::uint64_t df1r = 0;
  std::uint64_t df2r = 0;

  std::uint32_t run_delta() const { return runs_left + runs_right; }
};

PairEffect analyze_pair(const YProfile& p, std::size_t gl, int bl,
                        std::size_t gr, int br);

// The string realized by that pair of insertions.
BitString apply_pair(const BitString& y, std::size_t gl, int bl, std::size_t gr,
                     int br);

// Effect of a single insertion at gap g (d is 0 or 2 runs created).
struct SingleEffect {
  std::uint32_t runs_created = 0;
  std::uint64_t rank = 0;
  std::uint64_t df1 = 0;
  std::uint64_t df2 = 0;
  std::uint64_t df1r = 0;
  std::uint64_t df2r = 0;
};

SingleEffect analyze_single(const YProfile& p, std::size_t g, int b);

// Lift a residue to the unique integer congruent to it in
// [base, base + modulus).
std::uint64_t lift_residue(std::uint64_t residue, std::uint64_t modulus,
                           std::uint64_t base);

}  // namespace delcode::detail
