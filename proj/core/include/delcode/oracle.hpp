#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "delcode/bitstring.hpp"
#include "delcode/params.hpp"
#include "delcode/sketch.hpp"

namespace delcode {

// Reference decoder by exhaustion: every supersequence of y at the bundle's
// declared length whose bundle matches it exactly, in lexicographic order.
// The gap between the declared length and |y| must be 1 or 2.
std::vector<BitString> brute_decode(const BitString& y,
                                    const SketchBundle& bundle);

// Greedy codebook: scan all length-n strings in lexicographic order and
// keep each whose LCS with every kept string is below n-k.  The scan is
// exponential in n and guarded to n <= 16.
std::vector<BitString> greedy_code(std::size_t n, unsigned k);

// Whether the set corrects k deletions: pairwise LCS below n-k.
bool verify_code(const std::vector<BitString>& code, unsigned k);

// One exhaustive equivalence sweep at size n: every received string of the
// variant's shortened length, every sketch bucket among its
// supersequences, structured decoder output compared with the brute
// filter.  Sharded across jobs worker threads with a deterministic merge.
struct GridReport {
  std::uint64_t cases = 0;     // decoder invocations
  std::uint64_t failures = 0;  // disagreements with the brute filter
};
GridReport verify_variant_grid(std::size_t n, SketchVariant variant,
                               unsigned jobs = 1);

// Largest sketch increases over every (x, k-deleted y) pair at size n,
// used to certify that transmitted residues cannot wrap their moduli.
struct DeltaRanges {
  std::uint64_t df1 = 0;
  std::uint64_t df2 = 0;
  std::uint64_t df1r = 0;
  std::uint64_t df2r = 0;
};
DeltaRanges sketch_delta_ranges(std::size_t n, unsigned k);

namespace detail {

// Exact LCS length by quadratic dynamic programming.
std::size_t lcs_length(const BitString& a, const BitString& b);

// Decides LCS(a, b) >= t for equal-length strings by a banded scan of the
// insert/delete edit distance; exact because any alignment of length t
// keeps |i - j| <= n - t.
bool lcs_at_least(const BitString& a, const BitString& b, std::size_t t);

}  // namespace detail

}  // namespace delcode
