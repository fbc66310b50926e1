#include "delcode/codec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "delcode/decode2_unique.hpp"

namespace delcode {

BitString Codeword::assembled() const {
  return payload.concat(middle).concat(tail);
}

std::size_t Codeword::length() const {
  return payload.size() + middle.size() + tail.size();
}

CodecLayout CodecLayout::make(std::size_t n) {
  CodecLayout layout;
  layout.n = n;
  const unsigned delta = (n == 0) ? 0 : detail::floor_half_mul_log2(n, 7);
  layout.group = delta > 4 ? delta - 4 : 1;
  const CodeParams inner = CodeParams::make(n, SketchVariant::unique2);
  layout.bundle1_bits = inner.bundle_bits();
  const std::size_t markers =
      (layout.bundle1_bits + layout.group - 1) / layout.group;
  layout.middle_bits = layout.bundle1_bits + 4 * markers;
  layout.n1 = n + layout.middle_bits;
  const CodeParams outer = CodeParams::make(layout.n1, SketchVariant::unique2);
  layout.bundle2_bits = outer.bundle_bits();
  layout.total = layout.n1 + 3 * layout.bundle2_bits;
  return layout;
}

namespace detail {

BitString frame_bits(const std::vector<std::uint8_t>& payload,
                     std::size_t group) {
  if (group == 0) throw std::invalid_argument("frame_bits: zero group");
  BitString out;
  std::size_t i = 0;
  while (i < payload.size()) {
    out.push_back(0);
    out.push_back(0);
    out.push_back(1);
    out.push_back(1);
    const std::size_t take = std::min(group, payload.size() - i);
    for (std::size_t j = 0; j < take; ++j) out.push_back(payload[i + j]);
    i += take;
  }
  return out;
}

std::optional<std::vector<std::uint8_t>> unframe_bits(const BitString& framed,
                                                      std::size_t payload_len,
                                                      std::size_t group) {
  if (group == 0) return std::nullopt;
  const std::size_t markers = (payload_len + group - 1) / group;
  if (framed.size() != payload_len + 4 * markers) return std::nullopt;
  std::vector<std::uint8_t> out;
  out.reserve(payload_len);
  std::size_t pos = 0;
  while (out.size() < payload_len) {
    if (framed[pos] != 0 || framed[pos + 1] != 0 || framed[pos + 2] != 1 ||
        framed[pos + 3] != 1)
      return std::nullopt;
    pos += 4;
    const std::size_t take = std::min(group, payload_len - out.size());
    for (std::size_t j = 0; j < take; ++j) out.push_back(framed[pos + j]);
    pos += take;
  }
  return out;
}

}  // namespace detail

BitString rep_encode(const BitString& bits, unsigned k) {
  BitString out;
  for (std::size_t i = 0; i < bits.size(); ++i)
    for (unsigned r = 0; r <= k; ++r) out.push_back(bits[i]);
  return out;
}

DecodeResult<BitString> rep_decode(const BitString& received,
                                   std::size_t original_len, unsigned k) {
  using R = DecodeResult<BitString>;
  const std::size_t expected = original_len * (k + 1);
  if (received.size() > expected) return R::failure(DecodeStatus::bad_input);
  const std::size_t deficit = expected - received.size();
  if (deficit > k) return R::failure(DecodeStatus::bad_input);

  BitString out;
  std::size_t lifts = 0;
  std::size_t i = 0;
  while (i < received.size()) {
    std::size_t j = i;
    while (j < received.size() && received[j] == received[i]) ++j;
    const std::size_t len = j - i;
    // each full group of k+1 equal bits stood for one original bit; a
    // shortened run lifts to the next multiple
    const std::size_t groups = (len + k) / (k + 1);
    lifts += groups * (k + 1) - len;
    for (std::size_t g = 0; g < groups; ++g) out.push_back(received[i]);
    i = j;
  }
  if (lifts != deficit || out.size() != original_len)
    return R::failure(DecodeStatus::no_placement);
  return R::success(std::move(out));
}

Codeword encode_message(const BigInt& message, const CodeParams& params) {
  if (params.variant != SketchVariant::unique2)
    throw std::invalid_argument(
        "encode_message: params must use the unique two-deletion variant");
  const CodecLayout layout = CodecLayout::make(params.n);

  Codeword cw;
  cw.payload = reg_enc(message, params);
  if (!is_regular(cw.payload, params.d))
    throw internal_error("encode_message: irregular payload out of the codebook");

  const SketchBundle b1 = bundle(cw.payload, params);
  cw.middle = detail::frame_bits(bundle_to_bits(b1), layout.group);
  if (cw.middle.size() != layout.middle_bits)
    throw internal_error("encode_message: framed sketch length mismatch");

  const CodeParams outer = CodeParams::make(layout.n1, SketchVariant::unique2);
  const SketchBundle b2 = bundle(cw.payload.concat(cw.middle), outer);
  cw.tail = rep_encode(BitString(bundle_to_bits(b2)), 2);
  return cw;
}

DecodeResult<BigInt> decode_codeword(const BitString& received,
                                     const CodeParams& params) {
  using R = DecodeResult<BigInt>;
  if (params.variant != SketchVariant::unique2)
    return R::failure(DecodeStatus::bad_input);
  const CodecLayout layout = CodecLayout::make(params.n);
  if (received.size() > layout.total)
    return R::failure(DecodeStatus::bad_input);
  const std::size_t deficit = layout.total - received.size();
  if (deficit > 2) return R::failure(DecodeStatus::bad_input);

  const CodeParams outer = CodeParams::make(layout.n1, SketchVariant::unique2);
  std::optional<BigInt> agreed;

  // Try charging e of the missing bits to the payload-plus-middle section
  // and the rest to the tail; wrong splits die on one of the checks below.
  for (std::size_t e = 0; e <= deficit; ++e) {
    const std::size_t c_len = layout.n1 - e;
    const BitString c_rx = received.slice(1, c_len);
    const BitString tail_rx = received.slice(c_len + 1, received.size());

    const auto rep = rep_decode(tail_rx, layout.bundle2_bits, 2);
    if (!rep.ok()) continue;
    SketchBundle b2;
    try {
      b2 = bundle_from_bits((*rep).data(), outer);
    } catch (const std::invalid_argument&) {
      continue;
    }

    BitString c;
    if (e == 0) {
      if (bundle(c_rx, outer) != b2) continue;
      c = c_rx;
    } else if (e == 1) {
      const auto r = decode_unique2_single(c_rx, b2);
      if (!r.ok()) continue;
      c = *r;
    } else {
      const auto r = decode_unique2(c_rx, b2);
      if (!r.ok()) continue;
      c = *r;
    }

    const BitString payload_hat = c.slice(1, layout.n);
    const BitString middle_hat = c.slice(layout.n + 1, layout.n1);
    const auto inner_bits =
        detail::unframe_bits(middle_hat, layout.bundle1_bits, layout.group);
    if (!inner_bits) continue;
    SketchBundle b1;
    try {
      b1 = bundle_from_bits(*inner_bits, params);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (bundle(payload_hat, params) != b1) continue;

    const auto msg = reg_dec(payload_hat, params);
    if (!msg) continue;

    Codeword full;
    full.payload = payload_hat;
    full.middle = middle_hat;
    full.tail = rep_encode(*rep, 2);
    if (!received.is_subsequence_of(full.assembled())) continue;

    if (!agreed) {
      agreed = *msg;
    } else if (*agreed != *msg) {
      throw internal_error(
          "decode_codeword: two hypotheses decode different messages");
    }
  }

  if (!agreed) return R::failure(DecodeStatus::no_placement);
  return R::success(std::move(*agreed));
}

RedundancyRow redundancy_report(const CodeParams& params) {
  const CodecLayout layout = CodecLayout::make(params.n);
  RedundancyRow row;
  row.n = layout.n;
  row.middle_bits = layout.middle_bits;
  row.outer_bits = layout.bundle2_bits;
  row.overhead = layout.total - layout.n;
  if (layout.n > 2) {
    const double lg = std::log2(static_cast<double>(layout.n));
    row.ratio = (static_cast<double>(row.overhead) - 4.0 * lg) / std::log2(lg);
  }
  return row;
}

}  // namespace delcode
