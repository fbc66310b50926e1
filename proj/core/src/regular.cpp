#include "delcode/regular.hpp"

#include <stdexcept>

namespace delcode {

namespace {

// Packed walk state: bit 0 holds the previous bit, bits 1 and 2 record
// whether a 00 or 11 pair has appeared.
unsigned trans(unsigned st, int b) {
  const unsigned last = st & 1u;
  unsigned h00 = (st >> 1) & 1u;
  unsigned h11 = (st >> 2) & 1u;
  if (last == 0 && b == 0) h00 = 1;
  if (last == 1 && b == 1) h11 = 1;
  return static_cast<unsigned>(b) | (h00 << 1) | (h11 << 2);
}

bool accepting(unsigned st) { return (st >> 1) == 3u; }

BigInt u128_to_big(unsigned __int128 v) {
  return (BigInt(static_cast<std::uint64_t>(v >> 64)) << 64) +
         BigInt(static_cast<std::uint64_t>(v));
}

}  // namespace

bool is_regular(const BitString& x, unsigned d) {
  const std::size_t n = x.size();
  if (n == 0 || d == 0) return true;
  const std::size_t window = detail::ceil_mul_log2(n, d);
  if (window > n) return true;
  std::size_t last00 = 0, last11 = 0;  // latest pair end seen, 0 for none
  for (std::size_t e = 1; e <= n; ++e) {
    if (e >= 2) {
      if (x.bit(static_cast<long long>(e)) == 0 &&
          x.bit(static_cast<long long>(e) - 1) == 0)
        last00 = e;
      if (x.bit(static_cast<long long>(e)) == 1 &&
          x.bit(static_cast<long long>(e) - 1) == 1)
        last11 = e;
    }
    if (e >= window) {
      // the window e-window+1..e holds a pair iff one ends past its start
      const std::size_t cutoff = e - window + 2;
      if (last00 < cutoff || last11 < cutoff) return false;
    }
  }
  return true;
}

std::uint64_t count_no_00(std::size_t m) {
  if (m > 91)
    throw std::out_of_range("count_no_00: result exceeds 64 bits past m=91");
  std::uint64_t a = 1, b = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

RegularCodebook::RegularCodebook(std::size_t n, unsigned d) : n_(n) {
  delta_ = (n == 0) ? 0 : detail::floor_half_mul_log2(n, d);
  if (delta_ > 120)
    throw std::out_of_range("RegularCodebook: block length exceeds 120");
  blocks_ = (delta_ == 0) ? 0 : n_ / delta_;
  residual_ = n_ - blocks_ * delta_;

  if (blocks_ > 0) {
    counts_.assign((delta_ + 1) * 8, 0);
    for (unsigned st = 0; st < 8; ++st)
      counts_[delta_ * 8 + st] = accepting(st) ? 1 : 0;
    for (unsigned pos = delta_; pos-- > 1;)
      for (unsigned st = 0; st < 8; ++st)
        counts_[pos * 8 + st] = counts_[(pos + 1) * 8 + trans(st, 0)] +
                                counts_[(pos + 1) * 8 + trans(st, 1)];
    q_ = u128_to_big(counts_[8 + 0] + counts_[8 + 1]);
  } else {
    q_ = 1;
  }
  capacity_ = pow(q_, static_cast<unsigned>(blocks_)) * (BigInt(1) << residual_);
}

unsigned __int128 RegularCodebook::completions(std::size_t pos,
                                               unsigned state) const {
  return counts_[pos * 8 + state];
}

BitString RegularCodebook::encode(const BigInt& index) const {
  if (index < 0 || index >= capacity_)
    throw std::out_of_range("RegularCodebook: index outside capacity");

  std::vector<BigInt> digits(blocks_);
  BigInt rest = index;
  BigInt residual_value = 0;
  if (residual_ > 0) {
    const BigInt pow2 = BigInt(1) << residual_;
    residual_value = rest % pow2;
    rest /= pow2;
  }
  for (std::size_t i = blocks_; i-- > 0;) {
    digits[i] = rest % q_;
    rest /= q_;
  }

  BitString out;
  for (std::size_t blk = 0; blk < blocks_; ++blk) {
    BigInt v = digits[blk];
    unsigned st = 0;
    for (unsigned pos = 1; pos <= delta_; ++pos) {
      const unsigned st0 = (pos == 1) ? 0u : trans(st, 0);
      const unsigned st1 = (pos == 1) ? 1u : trans(st, 1);
      const BigInt w0 = u128_to_big(completions(pos, st0));
      if (v < w0) {
        out.push_back(0);
        st = st0;
      } else {
        v -= w0;
        out.push_back(1);
        st = st1;
      }
    }
  }
  for (std::size_t k = residual_; k-- > 0;)
    out.push_back(boost::multiprecision::bit_test(residual_value, k) ? 1 : 0);
  return out;
}

std::optional<BigInt> RegularCodebook::decode(const BitString& x) const {
  if (x.size() != n_)
    throw std::invalid_argument("RegularCodebook: wrong string length");

  BigInt acc = 0;
  std::size_t consumed = 0;
  for (std::size_t blk = 0; blk < blocks_; ++blk) {
    BigInt v = 0;
    unsigned st = 0;
    for (unsigned pos = 1; pos <= delta_; ++pos) {
      const int b = x[consumed + pos - 1];
      const unsigned st0 = (pos == 1) ? 0u : trans(st, 0);
      const unsigned st1 = (pos == 1) ? 1u : trans(st, 1);
      if (b == 1) {
        v += u128_to_big(completions(pos, st0));
        st = st1;
      } else {
        st = st0;
      }
    }
    if (!accepting(st)) return std::nullopt;
    acc = acc * q_ + v;
    consumed += delta_;
  }
  for (std::size_t k = 0; k < residual_; ++k)
    acc = acc * 2 + x[consumed + k];
  return acc;
}

BitString reg_enc(const BigInt& index, const CodeParams& params) {
  return RegularCodebook(params.n, params.d).encode(index);
}

std::optional<BigInt> reg_dec(const BitString& x, const CodeParams& params) {
  return RegularCodebook(params.n, params.d).decode(x);
}

}  // namespace delcode
