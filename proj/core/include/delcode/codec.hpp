#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "delcode/bitstring.hpp"
#include "delcode/params.hpp"
#include "delcode/regular.hpp"
#include "delcode/result.hpp"
#include "delcode/sketch.hpp"

namespace delcode {

// A complete codeword: regular payload, the payload's framed sketch, and a
// repetition-protected sketch of the first two sections combined.
struct Codeword {
  BitString payload;
  BitString middle;
  BitString tail;

  BitString assembled() const;
  std::size_t length() const;
};

// Deterministic segment geometry for a given message length.
struct CodecLayout {
  std::size_t n = 0;            // payload bits
  std::size_t group = 0;        // payload bits between framing markers
  std::size_t bundle1_bits = 0;  // inner sketch, before framing
  std::size_t middle_bits = 0;   // inner sketch after framing
  std::size_t n1 = 0;            // payload + middle, scale of the outer sketch
  std::size_t bundle2_bits = 0;  // outer sketch
  std::size_t total = 0;         // codeword length

  static CodecLayout make(std::size_t n);
};

// k+1-fold repetition of each bit, and its inverse under up to k deletions.
// The inverse lifts each received run to the next multiple of k+1 and
// demands that the lifts account for the missing bits exactly.
BitString rep_encode(const BitString& bits, unsigned k);
DecodeResult<BitString> rep_decode(const BitString& received,
                                   std::size_t original_len, unsigned k);

// Message index to codeword.  params carries the payload length n; the
// variant must be the full two-deletion kind.  Throws std::out_of_range
// when the index is outside the codebook.
Codeword encode_message(const BigInt& message, const CodeParams& params);

// Recovers the message from a codeword missing up to two bits.  Aborts via
// internal_error if two hypotheses validate with different messages, which
// would break the code property itself.
DecodeResult<BigInt> decode_codeword(const BitString& received,
                                     const CodeParams& params);

// Size accounting for one payload length.
struct RedundancyRow {
  std::size_t n = 0;
  std::size_t middle_bits = 0;  // framed inner sketch
  std::size_t outer_bits = 0;   // outer sketch before repetition
  std::size_t overhead = 0;     // codeword length minus n
  double ratio = 0.0;  // (overhead - 4 log2 n) / log2 log2 n, 0 when n <= 2
};
RedundancyRow redundancy_report(const CodeParams& params);

namespace detail {

// Inserts the 0011 marker before every group of payload bits.
BitString frame_bits(const std::vector<std::uint8_t>& payload,
                     std::size_t group);

// Strips and checks the markers; empty when the layout or a marker is off.
std::optional<std::vector<std::uint8_t>> unframe_bits(const BitString& framed,
                                                      std::size_t payload_len,
                                                      std::size_t group);

}  // namespace detail

}  // namespace delcode
