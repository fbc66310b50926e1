#pragma once

#include <cstdint>
#include <functional>

#include "delcode/bitstring.hpp"
#include "delcode/result.hpp"

namespace delcode {

// One step of the sweep decoders: the candidate string with the inserted
// bit's position and the running sketch value.  Deleting `pos` always gives
// back the received string.
struct MovingBitState {
  BitString current;
  std::size_t pos = 0;  // 1-based position of the inserted bit
  int bit = 0;
  std::uint64_t value = 0;  // f1 (VT sweep) or f1r (run sweep)
};

// Unique supersequence of y with the given position-sum residue mod n+1,
// n = |y| + 1.  Sweeps a moving bit from "0 appended" leftward, flips it to
// a 1 at the front, then walks right, stopping when the running sum hits
// the lifted target.
DecodeResult<BitString> decode_vt(const BitString& y, std::uint64_t f1_residue);

// Unique supersequence matching a rank-sum residue mod 2n+2.  Placements
// that extend an existing run are tried first (they raise the sum by the
// run's rank); run-creating placements are scanned right to left, where the
// raise is strictly larger than any run-extending placement's.
DecodeResult<BitString> decode_run1(const BitString& y,
                                    std::uint64_t f1r_residue);

namespace detail {

// Drives the VT sweep, invoking visit at every state in increasing order of
// the running sum; used by the decoder and by sweep-shape tests.
void vt_sweep(const BitString& y,
              const std::function<bool(const MovingBitState&)>& visit);

}  // namespace detail

}  // namespace delcode
