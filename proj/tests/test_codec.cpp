#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <set>

#include "delcode/codec.hpp"
#include "delcode/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace delcode;

TEST_CASE("layout at n = 64") {
  auto l = CodecLayout::make(64);
  CHECK(l.group == 17);
  CHECK(l.bundle1_bits == 113);
  CHECK(l.middle_bits == 141);
  CHECK(l.n1 == 205);
  CHECK(l.bundle2_bits == 122);
  CHECK(l.total == 571);
}

TEST_CASE("layout at n = 8") {
  auto l = CodecLayout::make(8);
  CHECK(l.group == 6);
  CHECK(l.bundle1_bits == 87);
  CHECK(l.middle_bits == 147);
  CHECK(l.n1 == 155);
  CHECK(l.bundle2_bits == 121);
  CHECK(l.total == 518);
}

TEST_CASE("framing inserts a 0011 marker before every group") {
  std::vector<std::uint8_t> payload = {1, 0, 1, 1, 0};
  auto framed = detail::frame_bits(payload, 2);
  CHECK(framed.to_string() == "00111000111100110");
  auto back = detail::unframe_bits(framed, payload.size(), 2);
  REQUIRE(back.has_value());
  CHECK(*back == payload);

  std::mt19937_64 rng(91);
  for (int t = 0; t < 300; ++t) {
    std::size_t len = rng() % 40;
    std::size_t group = 1 + rng() % 9;
    std::vector<std::uint8_t> bits(len);
    for (auto& b : bits) b = rng() & 1;
    auto f = detail::frame_bits(bits, group);
    std::size_t markers = (len + group - 1) / group;
    CHECK(f.size() == len + 4 * markers);
    auto u = detail::unframe_bits(f, len, group);
    REQUIRE(u.has_value());
    CHECK(*u == bits);
    if (f.size() > 0) {
      // flipping any single marker bit must be caught
      std::size_t flip = rng() % f.size() + 1;
      auto g = f;
      g[flip - 1] ^= 1;
      auto bad = detail::unframe_bits(g, len, group);
      if (bad.has_value()) {
        // the flip landed in payload; markers still check out
        CHECK(*bad != bits);
      }
    }
    CHECK_FALSE(detail::unframe_bits(f, len + 1, group).has_value());
  }
}

TEST_CASE("repetition code round trips under deletions") {
  auto bits = BitString::from_string("101");
  auto enc = rep_encode(bits, 2);
  CHECK(enc.to_string() == "111000111");

  // every corruption by at most two deletions comes back
  std::vector<std::vector<std::size_t>> patterns = {{}};
  for (std::size_t i = 1; i <= 9; ++i) patterns.push_back({i});
  for (std::size_t i = 1; i <= 9; ++i)
    for (std::size_t j = i + 1; j <= 9; ++j) patterns.push_back({i, j});
  for (const auto& pat : patterns) {
    auto r = rep_decode(enc.erased(pat), 3, 2);
    REQUIRE(r.ok());
    CHECK(*r == bits);
  }

  CHECK(rep_decode(BitString::from_string("111000111"), 2, 2).status ==
        DecodeStatus::bad_input);  // longer than 3 bits explain
  CHECK(rep_decode(BitString::from_string("101"), 3, 2).status ==
        DecodeStatus::bad_input);  // six bits missing
  CHECK(rep_decode(BitString::from_string("110110110"), 3, 2).status ==
        DecodeStatus::no_placement);  // full length but not 3-aligned
}

TEST_CASE("repetition recovery is exact on random inputs") {
  std::mt19937_64 rng(93);
  for (int t = 0; t < 2000; ++t) {
    std::size_t len = 1 + rng() % 30;
    unsigned k = 1 + rng() % 3;
    auto bits = testsupport::random_bits(rng, len);
    auto enc = rep_encode(bits, k);
    CHECK(enc.size() == len * (k + 1));
    std::size_t dels = rng() % (k + 1);
    auto y = dels ? enc.erased(testsupport::random_positions(rng, enc.size(), dels))
                  : enc;
    auto r = rep_decode(y, len, k);
    REQUIRE(r.ok());
    CHECK(*r == bits);
  }
}

TEST_CASE("encode and decode round trip without corruption") {
  std::mt19937_64 rng(95);
  for (std::size_t n : {8u, 16u, 40u}) {
    auto prm = CodeParams::make(n, SketchVariant::unique2);
    RegularCodebook cb(n);
    for (int t = 0; t < 25; ++t) {
      BigInt msg = BigInt(rng()) % cb.capacity();
      auto cw = encode_message(msg, prm);
      CHECK(cw.length() == CodecLayout::make(n).total);
      CHECK(cw.assembled().size() == cw.length());
      CHECK(is_regular(cw.payload));
      auto back = decode_codeword(cw.assembled(), prm);
      REQUIRE(back.ok());
      CHECK(*back == msg);
    }
  }
  CHECK_THROWS_AS(encode_message(BigInt(1) << 200,
                                 CodeParams::make(16, SketchVariant::unique2)),
                  std::out_of_range);
  CHECK_THROWS_AS(encode_message(BigInt(3), CodeParams::make(16, SketchVariant::vt1)),
                  std::invalid_argument);
}

TEST_CASE("single deletions anywhere in the codeword recover") {
  auto prm = CodeParams::make(16, SketchVariant::unique2);
  BigInt msg(31337);
  auto cw = encode_message(msg, prm).assembled();
  for (std::size_t i = 1; i <= cw.size(); ++i) {
    auto r = decode_codeword(cw.erased({i}), prm);
    REQUIRE(r.ok());
    CHECK(*r == msg);
  }
}

TEST_CASE("random deletion pairs recover") {
  auto prm = CodeParams::make(16, SketchVariant::unique2);
  std::mt19937_64 rng(97);
  RegularCodebook cb(16);
  for (int t = 0; t < 400; ++t) {
    BigInt msg = BigInt(rng()) % cb.capacity();
    auto cw = encode_message(msg, prm).assembled();
    auto y = cw.erased(testsupport::random_positions(rng, cw.size(), 2));
    auto r = decode_codeword(y, prm);
    REQUIRE(r.ok());
    CHECK(*r == msg);
  }
}

TEST_CASE("length discipline") {
  auto prm = CodeParams::make(16, SketchVariant::unique2);
  auto cw = encode_message(BigInt(5), prm).assembled();
  CHECK(decode_codeword(cw.erased({1, 2}).erased({1}), prm).status ==
        DecodeStatus::bad_input);  // three short
  auto longer = cw.inserted(1, 0);
  CHECK(decode_codeword(longer, prm).status == DecodeStatus::bad_input);
  CHECK(decode_codeword(BitString(), prm).status == DecodeStatus::bad_input);
}

TEST_CASE("small payload codewords form a two-deletion code") {
  auto prm = CodeParams::make(8, SketchVariant::unique2);
  RegularCodebook cb(8);
  REQUIRE(cb.capacity() == 256);
  std::vector<BitString> codewords;
  for (std::uint64_t m = 0; m < 256; ++m)
    codewords.push_back(encode_message(BigInt(m), prm).assembled());
  std::set<BitString> uniq(codewords.begin(), codewords.end());
  CHECK(uniq.size() == 256);
  CHECK(verify_code(codewords, 2));
}

TEST_CASE("redundancy accounting") {
  auto prm = CodeParams::make(1024, SketchVariant::unique2);
  auto row = redundancy_report(prm);
  auto l = CodecLayout::make(1024);
  CHECK(row.n == 1024);
  CHECK(row.middle_bits == l.middle_bits);
  CHECK(row.outer_bits == l.bundle2_bits);
  CHECK(row.overhead == l.total - 1024);
  double expect = (static_cast<double>(row.overhead) - 4 * 10.0) /
                  std::log2(10.0);
  CHECK(row.ratio == doctest::Approx(expect).epsilon(1e-9));
}
