#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace delcode {

// A binary string indexed 1..n in the math-facing API.  Storage is a plain
// vector of 0/1 bytes; the implicit boundary bits x[0]=0 and x[n+1]=1 used by
// the run-based machinery are *not* stored, callers get them via bit().
class BitString {
public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);
  static BitString from_string(std::string_view s);  // throws on non-[01] chars
  static BitString zeros(std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  // Value at 1-based position, with the boundary convention outside 1..n:
  // positions <= 0 read as 0, positions >= n+1 read as 1.
  int bit(long long pos) const {
    if (pos < 1) return 0;
    if (pos > static_cast<long long>(bits_.size())) return 1;
    return bits_[static_cast<std::size_t>(pos - 1)];
  }

  // Raw 0-based access for loop-heavy code.
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::uint8_t& operator[](std::size_t i) { return bits_[i]; }

  const std::vector<std::uint8_t>& data() const { return bits_; }

  void push_back(int b) { bits_.push_back(static_cast<std::uint8_t>(b & 1)); }

  std::size_t count_ones() const;
  std::string to_string() const;

  // String with positions `at` (1-based, distinct) removed.
  BitString erased(const std::vector<std::size_t>& at) const;
  // String with `b` inserted so that it lands at 1-based position `pos`
  // of the result (pos in 1..n+1).
  BitString inserted(std::size_t pos, int b) const;
  BitString concat(const BitString& other) const;
  // Substring covering 1-based positions [from, to]; empty when from > to.
  BitString slice(std::size_t from, std::size_t to) const;

  bool is_subsequence_of(const BitString& longer) const;

  auto operator<=>(const BitString&) const = default;
  bool operator==(const BitString&) const = default;

private:
  std::vector<std::uint8_t> bits_;
};

// Up to two 1-based deletion positions, kept sorted ascending.
class DeletionPattern {
public:
  DeletionPattern() = default;
  explicit DeletionPattern(std::vector<std::size_t> positions);

  std::size_t count() const { return positions_.size(); }
  const std::vector<std::size_t>& positions() const { return positions_; }

  // Checks every position lies in 1..n and applies the deletions.
  BitString apply(const BitString& x) const;

private:
  std::vector<std::size_t> positions_;
};

// All distinct strings of length |y|+k that contain y as a subsequence.
std::vector<BitString> supersequences(const BitString& y, unsigned k);

}  // namespace delcode
