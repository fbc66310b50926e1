#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "delcode/regular.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace delcode;

namespace {

bool has_00_and_11(const BitString& x, std::size_t from, std::size_t to) {
  bool z = false, o = false;
  for (std::size_t i = from; i + 1 <= to; ++i) {
    if (x.bit(static_cast<long long>(i)) == 0 &&
        x.bit(static_cast<long long>(i) + 1) == 0)
      z = true;
    if (x.bit(static_cast<long long>(i)) == 1 &&
        x.bit(static_cast<long long>(i) + 1) == 1)
      o = true;
  }
  return z && o;
}

// direct quadratic reference for the windowed property
bool is_regular_ref(const BitString& x, unsigned d) {
  if (x.size() < 2) return true;
  std::size_t T = detail::ceil_mul_log2(x.size(), d);
  if (T > x.size()) return true;
  for (std::size_t s = 1; s + T - 1 <= x.size(); ++s)
    if (!has_00_and_11(x, s, s + T - 1)) return false;
  return true;
}

}  // namespace

TEST_CASE("short strings are vacuously regular") {
  for (std::uint64_t v = 0; v < (1u << 8); ++v) {
    std::vector<std::uint8_t> bits(8);
    for (std::size_t i = 0; i < 8; ++i) bits[i] = (v >> i) & 1;
    CHECK(is_regular(BitString(std::move(bits))));
  }
}

TEST_CASE("window checker agrees with the quadratic reference") {
  std::mt19937_64 rng(81);
  for (int t = 0; t < 600; ++t) {
    std::size_t n = 40 + rng() % 90;
    // biased bits so both outcomes appear often
    std::vector<std::uint8_t> bits(n);
    bool alternate = rng() % 3 == 0;
    for (std::size_t i = 0; i < n; ++i)
      bits[i] = alternate ? i % 2 : (rng() & 1);
    if (rng() % 4 == 0) {
      // splice in a long alternating patch
      std::size_t start = rng() % (n / 2), len = 20 + rng() % 40;
      for (std::size_t i = start; i < std::min(n, start + len); ++i)
        bits[i] = i % 2;
    }
    BitString x(std::move(bits));
    CHECK(is_regular(x) == is_regular_ref(x, 7));
  }
}

TEST_CASE("regularity boundary cases at n = 64") {
  // window is ceil(7 * 6) = 42
  std::vector<std::uint8_t> good;
  for (int i = 0; i < 16; ++i)
    for (int b : {0, 0, 1, 1}) good.push_back(static_cast<std::uint8_t>(b));
  CHECK(is_regular(BitString(good)));

  std::vector<std::uint8_t> bad(64);
  for (std::size_t i = 0; i < 42; ++i) bad[i] = i % 2;  // first window fails
  for (std::size_t i = 42; i < 64; ++i) bad[i] = (i / 2) % 2;
  BitString xbad(bad);
  CHECK_FALSE(is_regular(xbad));
  CHECK(is_regular(xbad.slice(3, 64).concat(BitString::from_string("001"))) ==
        is_regular_ref(xbad.slice(3, 64).concat(BitString::from_string("001")), 7));

  CHECK_FALSE(is_regular(BitString::zeros(4096)));
}

TEST_CASE("no-00 count matches enumeration and the Fibonacci closed form") {
  CHECK(count_no_00(0) == 1);
  CHECK(count_no_00(1) == 2);
  CHECK(count_no_00(2) == 3);
  CHECK(count_no_00(3) == 5);
  std::uint64_t fib_prev = 1, fib = 2;  // F_2, F_3
  for (std::size_t m = 1; m <= 14; ++m) {
    std::uint64_t direct = 0;
    for (std::uint64_t v = 0; v < (1ull << m); ++v) {
      bool ok = true;
      for (std::size_t i = 0; i + 1 < m; ++i)
        if (((v >> i) & 1) == 0 && ((v >> (i + 1)) & 1) == 0) ok = false;
      direct += ok;
    }
    CHECK(count_no_00(m) == direct);
    if (m >= 2) CHECK(count_no_00(m) == fib_prev + fib);
    if (m >= 2) {
      auto next = fib_prev + fib;
      fib_prev = fib;
      fib = next;
    }
  }
  CHECK_THROWS(count_no_00(92));
}

TEST_CASE("codebook at the first blocked size") {
  RegularCodebook cb(12);
  CHECK(cb.block_bits() == 12);
  CHECK(cb.full_blocks() == 1);
  CHECK(cb.residual_bits() == 0);
  // count strings containing both a 00 and a 11 directly
  std::uint64_t direct = 0;
  for (std::uint64_t v = 0; v < (1ull << 12); ++v) {
    bool z = false, o = false;
    for (std::size_t i = 0; i + 1 < 12; ++i) {
      auto a = (v >> i) & 1, b = (v >> (i + 1)) & 1;
      z |= (a == 0 && b == 0);
      o |= (a == 1 && b == 1);
    }
    direct += z && o;
  }
  CHECK(direct == 3344);  // 2^12 - 2 F_14 + 2
  CHECK(cb.alphabet_size() == 3344);
  CHECK(cb.capacity() == 3344);

  // full bijection, lexicographic order, and the block property
  std::set<BitString> seen;
  BitString prev;
  for (std::uint64_t i = 0; i < 3344; ++i) {
    auto x = cb.encode(i);
    CHECK(x.size() == 12);
    CHECK(has_00_and_11(x, 1, 12));
    if (i > 0) CHECK(prev < x);
    prev = x;
    seen.insert(x);
    auto back = cb.decode(x);
    REQUIRE(back.has_value());
    CHECK(*back == i);
  }
  CHECK(seen.size() == 3344);
  CHECK_THROWS_AS(cb.encode(3344), std::out_of_range);
  CHECK_THROWS_AS(cb.encode(BigInt(-1)), std::out_of_range);
  CHECK_FALSE(cb.decode(BitString::from_string("010101010101")).has_value());
  CHECK_THROWS(cb.decode(BitString::from_string("0101")));
}

TEST_CASE("a residual bit doubles the capacity") {
  RegularCodebook cb(13);
  CHECK(cb.block_bits() == 12);
  CHECK(cb.full_blocks() == 1);
  CHECK(cb.residual_bits() == 1);
  CHECK(cb.capacity() == 6688);
  for (std::uint64_t i : {0ull, 1ull, 3343ull, 3344ull, 6687ull}) {
    auto x = cb.encode(i);
    auto back = cb.decode(x);
    REQUIRE(back.has_value());
    CHECK(*back == i);
  }
  // residual is least significant: consecutive indices differ in the tail bit
  CHECK(cb.encode(0).slice(1, 12) == cb.encode(1).slice(1, 12));
  CHECK(cb.encode(0).bit(13) == 0);
  CHECK(cb.encode(1).bit(13) == 1);
}

TEST_CASE("small sizes fall back to the identity map") {
  RegularCodebook cb(11);
  CHECK(cb.full_blocks() == 0);
  CHECK(cb.residual_bits() == 11);
  CHECK(cb.capacity() == 2048);
  CHECK(cb.encode(0) == BitString::zeros(11));
  CHECK(cb.encode(1).to_string() == "00000000001");
  for (std::uint64_t i : {0ull, 5ull, 1024ull, 2047ull}) {
    auto back = cb.decode(cb.encode(i));
    REQUIRE(back.has_value());
    CHECK(*back == i);
  }
}

TEST_CASE("codebook at n = 64") {
  RegularCodebook cb(64);
  CHECK(cb.block_bits() == 21);
  CHECK(cb.full_blocks() == 3);
  CHECK(cb.residual_bits() == 1);
  BigInt q(2039840);  // 2^21 - 2 F_23 + 2
  CHECK(cb.alphabet_size() == q);
  CHECK(cb.capacity() == q * q * q * 2);

  std::mt19937_64 rng(83);
  for (int t = 0; t < 500; ++t) {
    BigInt idx = 0;
    for (int limb = 0; limb < 2; ++limb) idx = (idx << 32) | (rng() & 0xffffffff);
    idx %= cb.capacity();
    auto x = cb.encode(idx);
    CHECK(is_regular(x));
    auto back = cb.decode(x);
    REQUIRE(back.has_value());
    CHECK(*back == idx);
  }
}

TEST_CASE("params-driven wrappers round trip") {
  auto prm = CodeParams::make(40, SketchVariant::unique2);
  std::mt19937_64 rng(87);
  for (int t = 0; t < 200; ++t) {
    RegularCodebook cb(40);
    BigInt idx = BigInt(rng()) % cb.capacity();
    auto x = reg_enc(idx, prm);
    CHECK(x.size() == 40);
    CHECK(is_regular(x));
    auto back = reg_dec(x, prm);
    REQUIRE(back.has_value());
    CHECK(*back == idx);
  }
}
