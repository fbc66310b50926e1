#include <stdexcept>
#include <string>

#include "delcode/sketch.hpp"

// Wire formats for SketchBundle; layouts are documented in docs/formats.md
// and fixed by the round-trip tests.

namespace delcode {

namespace {

constexpr std::uint8_t kMagic0 = 'D';
constexpr std::uint8_t kMagic1 = 'S';
constexpr std::uint8_t kVersion = 1;

enum FieldId : std::uint8_t {
  kF1 = 0x01,
  kF2 = 0x02,
  kF1r = 0x03,
  kF2r = 0x04,
  kOnes3 = 0x05,
  kRuns5 = 0x06,
  kBlocks1 = 0x07,
  kBlocks2 = 0x08,
};

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_field_header(std::vector<std::uint8_t>& out, FieldId id,
                      std::uint16_t len) {
  out.push_back(id);
  put_u16(out, len);
}

void put_residue_field(std::vector<std::uint8_t>& out, FieldId id,
                       std::uint64_t value, std::uint64_t modulus) {
  put_field_header(out, id, 16);
  put_u64(out, value);
  put_u64(out, modulus);
}

void put_block_field(std::vector<std::uint8_t>& out, FieldId id,
                     const BlockSketch& s) {
  put_field_header(out, id, 1 + 2 + 2 + 8 + 8);
  out.push_back(static_cast<std::uint8_t>(s.division));
  put_u16(out, s.width2);
  put_u16(out, s.width3);
  put_u64(out, s.f2r_xor);
  put_u64(out, s.f3r_xor);
}

class ByteReader {
 public:
  explicit ByteReader(const std::vector<std::uint8_t>& b) : b_(b) {}

  std::uint8_t u8() {
    need(1);
    return b_[pos_++];
  }
  std::uint16_t u16() {
    need(2);
    std::uint16_t v = static_cast<std::uint16_t>(b_[pos_] | (b_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b_[pos_ + i]) << (8 * i);
    pos_ += 8;
    return v;
  }
  bool done() const { return pos_ == b_.size(); }

 private:
  void need(std::size_t k) const {
    if (pos_ + k > b_.size())
      throw std::invalid_argument("parse_bundle: truncated input");
  }
  const std::vector<std::uint8_t>& b_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> serialize_bundle(const SketchBundle& b) {
  const CodeParams& p = b.params;
  std::vector<std::uint8_t> out;
  out.push_back(kMagic0);
  out.push_back(kMagic1);
  out.push_back(kVersion);
  out.push_back(static_cast<std::uint8_t>(p.variant));
  put_u64(out, p.n);

  std::uint16_t fields = 0;
  fields += (p.mod_f1 != 0) + (p.mod_f2 != 0) + (p.mod_f1r != 0) +
            (p.mod_f2r != 0) + p.has_ones3 + p.has_runs5 + (p.blocks ? 2 : 0);
  put_u16(out, fields);

  if (p.mod_f1) put_residue_field(out, kF1, b.f1, p.mod_f1);
  if (p.mod_f2) put_residue_field(out, kF2, b.f2, p.mod_f2);
  if (p.mod_f1r) put_residue_field(out, kF1r, b.f1r, p.mod_f1r);
  if (p.mod_f2r) put_residue_field(out, kF2r, b.f2r, p.mod_f2r);
  if (p.has_ones3) {
    put_field_header(out, kOnes3, 1);
    out.push_back(b.ones3);
  }
  if (p.has_runs5) {
    put_field_header(out, kRuns5, 1);
    out.push_back(b.runs5);
  }
  if (p.blocks) {
    put_block_field(out, kBlocks1, b.blocks->first);
    put_block_field(out, kBlocks2, b.blocks->second);
  }
  return out;
}

SketchBundle parse_bundle(const std::vector<std::uint8_t>& bytes) {
  ByteReader r(bytes);
  if (r.u8() != kMagic0 || r.u8() != kMagic1)
    throw std::invalid_argument("parse_bundle: bad magic");
  if (r.u8() != kVersion)
    throw std::invalid_argument("parse_bundle: unsupported version");
  auto variant = static_cast<SketchVariant>(r.u8());
  if (variant > SketchVariant::unique2)
    throw std::invalid_argument("parse_bundle: unknown variant");
  std::uint64_t n = r.u64();
  if (n == 0) throw std::invalid_argument("parse_bundle: n must be positive");

  SketchBundle b;
  b.params = CodeParams::make(static_cast<std::size_t>(n), variant);
  const CodeParams& p = b.params;

  auto check_modulus = [](std::uint64_t got, std::uint64_t expect,
                          const char* what) {
    if (expect == 0)
      throw std::invalid_argument(std::string("parse_bundle: unexpected field ") + what);
    if (got != expect)
      throw std::invalid_argument(std::string("parse_bundle: modulus mismatch for ") + what);
  };

  std::uint16_t fields = r.u16();
  std::optional<BlockSketch> blk1, blk2;
  for (std::uint16_t i = 0; i < fields; ++i) {
    std::uint8_t id = r.u8();
    std::uint16_t len = r.u16();
    switch (id) {
      case kF1: {
        if (len != 16) throw std::invalid_argument("parse_bundle: bad f1 length");
        b.f1 = r.u64();
        check_modulus(r.u64(), p.mod_f1, "f1");
        if (b.f1 >= p.mod_f1) throw std::invalid_argument("parse_bundle: f1 residue out of range");
        break;
      }
      case kF2: {
        if (len != 16) throw std::invalid_argument("parse_bundle: bad f2 length");
        b.f2 = r.u64();
        check_modulus(r.u64(), p.mod_f2, "f2");
        if (b.f2 >= p.mod_f2) throw std::invalid_argument("parse_bundle: f2 residue out of range");
        break;
      }
      case kF1r: {
        if (len != 16) throw std::invalid_argument("parse_bundle: bad f1r length");
        b.f1r = r.u64();
        check_modulus(r.u64(), p.mod_f1r, "f1r");
        if (b.f1r >= p.mod_f1r) throw std::invalid_argument("parse_bundle: f1r residue out of range");
        break;
      }
      case kF2r: {
        if (len != 16) throw std::invalid_argument("parse_bundle: bad f2r length");
        b.f2r = r.u64();
        check_modulus(r.u64(), p.mod_f2r, "f2r");
        if (b.f2r >= p.mod_f2r) throw std::invalid_argument("parse_bundle: f2r residue out of range");
        break;
      }
      case kOnes3: {
        if (len != 1 || !p.has_ones3)
          throw std::invalid_argument("parse_bundle: bad ones3 field");
        b.ones3 = r.u8();
        if (b.ones3 >= 3) throw std::invalid_argument("parse_bundle: ones3 out of range");
        break;
      }
      case kRuns5: {
        if (len != 1 || !p.has_runs5)
          throw std::invalid_argument("parse_bundle: bad runs5 field");
        b.runs5 = r.u8();
        if (b.runs5 >= 5) throw std::invalid_argument("parse_bundle: runs5 out of range");
        break;
      }
      case kBlocks1:
      case kBlocks2: {
        if (len != 21 || !p.blocks)
          throw std::invalid_argument("parse_bundle: bad block field");
        BlockSketch s;
        std::uint8_t div = r.u8();
        if (div != 1 && div != 2)
          throw std::invalid_argument("parse_bundle: bad block division");
        s.division = static_cast<BlockDivision>(div);
        s.width2 = r.u16();
        s.width3 = r.u16();
        s.f2r_xor = r.u64();
        s.f3r_xor = r.u64();
        if (s.width2 != p.blocks->width2 || s.width3 != p.blocks->width3)
          throw std::invalid_argument("parse_bundle: block width mismatch");
        bool first = id == kBlocks1;
        if (first != (s.division == BlockDivision::aligned))
          throw std::invalid_argument("parse_bundle: block division/id mismatch");
        (first ? blk1 : blk2) = s;
        break;
      }
      default:
        throw std::invalid_argument("parse_bundle: unknown field id");
    }
  }
  if (p.blocks) {
    if (!blk1 || !blk2)
      throw std::invalid_argument("parse_bundle: missing block fields");
    b.blocks = std::make_pair(*blk1, *blk2);
  }
  if (!r.done()) throw std::invalid_argument("parse_bundle: trailing bytes");
  return b;
}

namespace {

void put_bits(std::vector<std::uint8_t>& out, std::uint64_t value,
              std::size_t width) {
  for (std::size_t i = 0; i < width; ++i)
    out.push_back(static_cast<std::uint8_t>((value >> (width - 1 - i)) & 1));
}

class BitReader {
 public:
  explicit BitReader(const std::vector<std::uint8_t>& bits) : bits_(bits) {}

  std::uint64_t take(std::size_t width) {
    if (pos_ + width > bits_.size())
      throw std::invalid_argument("bundle_from_bits: truncated input");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width; ++i) v = (v << 1) | (bits_[pos_++] & 1);
    return v;
  }

 private:
  const std::vector<std::uint8_t>& bits_;
  std::size_t pos_ = 0;
};

std::size_t residue_width(std::uint64_t modulus) {
  return detail::ceil_log2_u64(modulus);
}

}  // namespace

std::vector<std::uint8_t> bundle_to_bits(const SketchBundle& b) {
  const CodeParams& p = b.params;
  std::vector<std::uint8_t> out;
  out.reserve(p.bundle_bits());
  if (p.mod_f1) put_bits(out, b.f1, residue_width(p.mod_f1));
  if (p.mod_f2) put_bits(out, b.f2, residue_width(p.mod_f2));
  if (p.mod_f1r) put_bits(out, b.f1r, residue_width(p.mod_f1r));
  if (p.mod_f2r) put_bits(out, b.f2r, residue_width(p.mod_f2r));
  if (p.has_ones3) put_bits(out, b.ones3, 2);
  if (p.has_runs5) put_bits(out, b.runs5, 3);
  if (p.blocks) {
    for (const BlockSketch* s : {&b.blocks->first, &b.blocks->second}) {
      put_bits(out, s->f2r_xor, s->width2);
      put_bits(out, s->f3r_xor, s->width3);
    }
  }
  return out;
}

SketchBundle bundle_from_bits(const std::vector<std::uint8_t>& bits,
                              const CodeParams& params) {
  if (bits.size() != params.bundle_bits())
    throw std::invalid_argument("bundle_from_bits: wrong bit count");
  BitReader r(bits);
  SketchBundle b;
  b.params = params;
  if (params.mod_f1) {
    b.f1 = r.take(residue_width(params.mod_f1));
    if (b.f1 >= params.mod_f1)
      throw std::invalid_argument("bundle_from_bits: f1 residue out of range");
  }
  if (params.mod_f2) {
    b.f2 = r.take(residue_width(params.mod_f2));
    if (b.f2 >= params.mod_f2)
      throw std::invalid_argument("bundle_from_bits: f2 residue out of range");
  }
  if (params.mod_f1r) {
    b.f1r = r.take(residue_width(params.mod_f1r));
    if (b.f1r >= params.mod_f1r)
      throw std::invalid_argument("bundle_from_bits: f1r residue out of range");
  }
  if (params.mod_f2r) {
    b.f2r = r.take(residue_width(params.mod_f2r));
    if (b.f2r >= params.mod_f2r)
      throw std::invalid_argument("bundle_from_bits: f2r residue out of range");
  }
  if (params.has_ones3) {
    b.ones3 = static_cast<std::uint8_t>(r.take(2));
    if (b.ones3 >= 3)
      throw std::invalid_argument("bundle_from_bits: ones3 out of range");
  }
  if (params.has_runs5) {
    b.runs5 = static_cast<std::uint8_t>(r.take(3));
    if (b.runs5 >= 5)
      throw std::invalid_argument("bundle_from_bits: runs5 out of range");
  }
  if (params.blocks) {
    BlockSketch s1, s2;
    s1.division = BlockDivision::aligned;
    s2.division = BlockDivision::straddling;
    for (BlockSketch* s : {&s1, &s2}) {
      s->width2 = static_cast<std::uint16_t>(params.blocks->width2);
      s->width3 = static_cast<std::uint16_t>(params.blocks->width3);
      s->f2r_xor = r.take(s->width2);
      s->f3r_xor = r.take(s->width3);
    }
    b.blocks = std::make_pair(s1, s2);
  }
  return b;
}

}  // namespace delcode
