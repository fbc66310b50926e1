#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "delcode/bitstring.hpp"
#include "delcode/rank.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace delcode;

TEST_CASE("construction and round trips") {
  auto x = BitString::from_string("001011");
  CHECK(x.size() == 6);
  CHECK(x.to_string() == "001011");
  CHECK(x.count_ones() == 3);
  CHECK(BitString::from_string("") == BitString());
  CHECK(BitString::zeros(4).to_string() == "0000");
  CHECK_THROWS(BitString::from_string("01x1"));
}

TEST_CASE("boundary bit convention") {
  auto x = BitString::from_string("0110");
  CHECK(x.bit(0) == 0);
  CHECK(x.bit(-3) == 0);
  CHECK(x.bit(1) == 0);
  CHECK(x.bit(2) == 1);
  CHECK(x.bit(4) == 0);
  CHECK(x.bit(5) == 1);
  CHECK(x.bit(99) == 1);
  CHECK(BitString().bit(0) == 0);
  CHECK(BitString().bit(1) == 1);
}

TEST_CASE("insert and erase are inverse") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 12;
    auto x = testsupport::random_bits(rng, n);
    std::size_t pos = rng() % (n + 1) + 1;
    int b = static_cast<int>(rng() & 1);
    auto bigger = x.inserted(pos, b);
    CHECK(bigger.size() == n + 1);
    CHECK(bigger.bit(static_cast<long long>(pos)) == b);
    CHECK(bigger.erased({pos}) == x);
    CHECK(x.is_subsequence_of(bigger));
  }
}

TEST_CASE("erase positions are 1-based and order independent") {
  auto x = BitString::from_string("10110");
  CHECK(x.erased({1, 5}).to_string() == "011");
  CHECK(x.erased({5, 1}).to_string() == "011");
  CHECK(x.erased({3}).to_string() == "1010");
  CHECK_THROWS(x.erased({0}));
  CHECK_THROWS(x.erased({6}));
  CHECK_THROWS(x.erased({2, 2}));
}

TEST_CASE("slice and concat") {
  auto x = BitString::from_string("110100");
  CHECK(x.slice(2, 4).to_string() == "101");
  CHECK(x.slice(1, 6) == x);
  CHECK(x.slice(4, 3).empty());
  CHECK(x.slice(1, 3).concat(x.slice(4, 6)) == x);
}

TEST_CASE("subsequence relation") {
  auto y = BitString::from_string("0101");
  CHECK(y.is_subsequence_of(BitString::from_string("001011")));
  CHECK(y.is_subsequence_of(y));
  CHECK_FALSE(y.is_subsequence_of(BitString::from_string("0011")));
  CHECK(BitString().is_subsequence_of(y));
  CHECK_FALSE(y.is_subsequence_of(BitString()));
}

TEST_CASE("deletion patterns validate and apply") {
  auto x = BitString::from_string("101101");
  DeletionPattern p({2, 5});
  CHECK(p.count() == 2);
  CHECK(p.apply(x).to_string() == "1111");
  CHECK_THROWS(DeletionPattern({3, 3}));
  CHECK_THROWS(DeletionPattern({1, 2, 3}));
  CHECK_THROWS(DeletionPattern({0}).apply(x));
  CHECK_THROWS(DeletionPattern({7}).apply(x));
}

TEST_CASE("supersequences of 00 by one bit") {
  auto sup = supersequences(BitString::from_string("00"), 1);
  std::vector<std::string> got;
  for (const auto& s : sup) got.push_back(s.to_string());
  // four distinct strings of length 3 contain 00
  std::vector<std::string> want = {"000", "001", "010", "100"};
  CHECK(got == want);
}

TEST_CASE("supersequences are exactly the superset relation") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::size_t m = rng() % 7;
    auto y = testsupport::random_bits(rng, m);
    for (unsigned k : {1u, 2u}) {
      auto sup = supersequences(y, k);
      CHECK(std::is_sorted(sup.begin(), sup.end()));
      CHECK(std::adjacent_find(sup.begin(), sup.end()) == sup.end());
      std::set<BitString> have(sup.begin(), sup.end());
      // cross-check against a scan of the full length-(m+k) cube
      std::size_t total = 0;
      const std::size_t n = m + k;
      for (std::uint64_t v = 0; v < (1ull << n); ++v) {
        std::vector<std::uint8_t> bits(n);
        for (std::size_t i = 0; i < n; ++i) bits[i] = (v >> i) & 1;
        BitString x(std::move(bits));
        bool contains = y.is_subsequence_of(x);
        CHECK(contains == have.count(x));
        total += contains;
      }
      CHECK(total == sup.size());
    }
  }
}

TEST_CASE("rank sequence of a worked example") {
  auto x = BitString::from_string("001000111010");
  auto r = RankSequence::of(x);
  std::vector<std::uint32_t> want = {0, 0, 0, 1, 2, 2, 2, 3, 3, 3, 4, 5, 6, 7};
  CHECK(r.values() == want);
  CHECK(r.runs() == 7);
  CHECK(r.to_bitstring() == x);
}

TEST_CASE("rank sequences reconstruct and stay odd") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    auto x = testsupport::random_bits(rng, rng() % 20);
    auto r = RankSequence::of(x);
    CHECK(r.values().size() == x.size() + 2);
    CHECK(r.values().front() == 0);
    CHECK(r.runs() % 2 == 1);
    for (std::size_t i = 0; i + 1 < r.values().size(); ++i) {
      auto step = r.values()[i + 1] - r.values()[i];
      CHECK(step <= 1);
    }
    CHECK(r.to_bitstring() == x);
  }
}
