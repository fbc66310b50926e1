#pragma once

#include <cstdint>
#include <vector>

#include "delcode/bitstring.hpp"
#include "delcode/result.hpp"
#include "delcode/sketch.hpp"

namespace delcode {

// Candidate set for a string that lost two bits, recovered from its
// rank-sum and rank-pair-sum residues plus the run count mod 5.  The list
// always contains the true string, is sorted, and never exceeds two
// entries; a third match would disprove the size-2 guarantee, so that case
// throws internal_error instead of returning quietly.
DecodeResult<std::vector<BitString>> decode_list2(const BitString& y,
                                                  const SketchBundle& bundle);

namespace detail {

// Equal-sum comparison hypothesis between two sequences of non-negative
// integers: b_i <= t wherever b_i > a_i, and b_i >= t wherever b_i < a_i.
// When it holds and the sequences differ, the pair weight of a strictly
// exceeds that of b.
bool spread_hypothesis(const std::vector<std::uint64_t>& a,
                       const std::vector<std::uint64_t>& b, std::uint64_t t);

// Same test with the threshold chosen automatically when any value works.
bool spread_hypothesis(const std::vector<std::uint64_t>& a,
                       const std::vector<std::uint64_t>& b);

// Sum of v*(v-1) over the sequence, the weight the inequality compares.
std::uint64_t spread_weight(const std::vector<std::uint64_t>& v);

}  // namespace detail

}  // namespace delcode
