#include "delcode/rank.hpp"

#include <stdexcept>

namespace delcode {

RankSequence RankSequence::of(const BitString& x) {
  const auto n = static_cast<long long>(x.size());
  RankSequence rs;
  rs.r_.resize(x.size() + 2);
  rs.r_[0] = 0;
  for (long long i = 1; i <= n + 1; ++i) {
    rs.r_[i] = rs.r_[i - 1] + (x.bit(i) != x.bit(i - 1) ? 1u : 0u);
  }
  return rs;
}

BitString RankSequence::to_bitstring() const {
  if (r_.size() < 2 || r_.front() != 0)
    throw std::invalid_argument("rank sequence must start at 0");
  std::vector<std::uint8_t> bits;
  bits.reserve(r_.size() - 2);
  for (std::size_t i = 1; i + 1 < r_.size(); ++i) {
    auto step = r_[i] - r_[i - 1];
    if (r_[i] < r_[i - 1] || step > 1)
      throw std::invalid_argument("rank sequence must step by 0 or 1");
    bits.push_back(static_cast<std::uint8_t>(r_[i] % 2));
  }
  auto last = r_.back();
  if (last < r_[r_.size() - 2] || last - r_[r_.size() - 2] > 1 || last % 2 == 0)
    throw std::invalid_argument("rank sequence must end on an odd value");
  return BitString(std::move(bits));
}

}  // namespace delcode
