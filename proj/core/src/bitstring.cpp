#include "delcode/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

namespace delcode {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("BitString: bytes must be 0 or 1");
  }
}

BitString BitString::from_string(std::string_view s) {
  std::vector<std::uint8_t> v;
  v.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("BitString: expected only '0'/'1'");
    v.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BitString(std::move(v));
}

BitString BitString::zeros(std::size_t n) {
  return BitString(std::vector<std::uint8_t>(n, 0));
}

std::size_t BitString::count_ones() const {
  std::size_t c = 0;
  for (auto b : bits_) c += b;
  return c;
}

std::string BitString::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

BitString BitString::erased(const std::vector<std::size_t>& at) const {
  std::vector<bool> drop(bits_.size() + 1, false);
  for (auto p : at) {
    if (p < 1 || p > bits_.size())
      throw std::out_of_range("erased: position outside 1..n");
    if (drop[p]) throw std::invalid_argument("erased: repeated position");
    drop[p] = true;
  }
  std::vector<std::uint8_t> out;
  out.reserve(bits_.size() - at.size());
  for (std::size_t i = 1; i <= bits_.size(); ++i) {
    if (!drop[i]) out.push_back(bits_[i - 1]);
  }
  return BitString(std::move(out));
}

BitString BitString::inserted(std::size_t pos, int b) const {
  if (pos < 1 || pos > bits_.size() + 1)
    throw std::out_of_range("inserted: position outside 1..n+1");
  std::vector<std::uint8_t> out;
  out.reserve(bits_.size() + 1);
  out.insert(out.end(), bits_.begin(), bits_.begin() + (pos - 1));
  out.push_back(static_cast<std::uint8_t>(b & 1));
  out.insert(out.end(), bits_.begin() + (pos - 1), bits_.end());
  return BitString(std::move(out));
}

BitString BitString::concat(const BitString& other) const {
  std::vector<std::uint8_t> out;
  out.reserve(bits_.size() + other.bits_.size());
  out.insert(out.end(), bits_.begin(), bits_.end());
  out.insert(out.end(), other.bits_.begin(), other.bits_.end());
  return BitString(std::move(out));
}

BitString BitString::slice(std::size_t from, std::size_t to) const {
  if (from < 1) throw std::out_of_range("slice: from < 1");
  if (to > bits_.size()) throw std::out_of_range("slice: to > n");
  if (from > to) return BitString();
  return BitString(std::vector<std::uint8_t>(bits_.begin() + (from - 1),
                                             bits_.begin() + to));
}

bool BitString::is_subsequence_of(const BitString& longer) const {
  std::size_t i = 0;
  for (std::size_t j = 0; j < longer.size() && i < size(); ++j) {
    if (longer[j] == bits_[i]) ++i;
  }
  return i == size();
}

DeletionPattern::DeletionPattern(std::vector<std::size_t> positions)
    : positions_(std::move(positions)) {
  if (positions_.size() > 2)
    throw std::invalid_argument("DeletionPattern: at most two positions");
  std::sort(positions_.begin(), positions_.end());
  if (positions_.size() == 2 && positions_[0] == positions_[1])
    throw std::invalid_argument("DeletionPattern: positions must be distinct");
  for (auto p : positions_) {
    if (p < 1) throw std::invalid_argument("DeletionPattern: positions are 1-based");
  }
}

BitString DeletionPattern::apply(const BitString& x) const {
  return x.erased(positions_);
}

std::vector<BitString> supersequences(const BitString& y, unsigned k) {
  std::vector<BitString> cur = {y};
  for (unsigned round = 0; round < k; ++round) {
    std::vector<BitString> next;
    next.reserve(cur.size() * (cur.empty() ? 2 : 2 * (cur[0].size() + 1)));
    for (const auto& s : cur) {
      for (std::size_t pos = 1; pos <= s.size() + 1; ++pos) {
        next.push_back(s.inserted(pos, 0));
        next.push_back(s.inserted(pos, 1));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
  return cur;
}

}  // namespace delcode
