#pragma once

#include <cstdint>
#include <vector>

#include "delcode/bitstring.hpp"

namespace delcode {

// The run-rank sequence of a string under the fixed boundary x[0]=0,
// x[n+1]=1: r[0] = 0 and r[i+1] = r[i] + (x[i+1] != x[i]).  Entry i of
// values() is r[i], for i in 0..n+1, so values().back() counts the runs of
// the extended string and is always odd.
class RankSequence {
public:
  static RankSequence of(const BitString& x);

  const std::vector<std::uint32_t>& values() const { return r_; }
  std::uint32_t runs() const { return r_.back(); }

  // Reconstructs the string the sequence came from: bit i is the parity
  // of r[i].  Rejects sequences that no string produces.
  BitString to_bitstring() const;

private:
  std::vector<std::uint32_t> r_;
};

}  // namespace delcode
