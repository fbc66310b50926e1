#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "delcode/bitstring.hpp"
#include "delcode/params.hpp"

namespace delcode {

using BigInt = boost::multiprecision::cpp_int;

// A string is regular when every contiguous window of length
// ceil(d * log2 n) contains both a 00 and a 11.  Strings shorter than the
// window length pass vacuously.
bool is_regular(const BitString& x, unsigned d = 7);

// Number of length-m strings with no two adjacent 0s; equals the Fibonacci
// number F_{m+2} under F_1 = F_2 = 1.  Guarded to m <= 91 so the count
// fits in 64 bits.
std::uint64_t count_no_00(std::size_t m);

// Bijection between an integer range and a set of guaranteed-regular
// strings: the first m blocks of delta bits each range over the length-delta
// strings containing both 00 and 11 (in lexicographic order), and the
// n - m*delta residual bits are free.  Indices decompose in mixed radix
// with the first block most significant and the residual least.
class RegularCodebook {
 public:
  explicit RegularCodebook(std::size_t n, unsigned d = 7);

  std::size_t n() const { return n_; }
  unsigned block_bits() const { return delta_; }        // delta
  std::size_t full_blocks() const { return blocks_; }   // m
  std::size_t residual_bits() const { return residual_; }
  const BigInt& alphabet_size() const { return q_; }    // per-block choices
  const BigInt& capacity() const { return capacity_; }  // indexable range

  // Index to string; throws std::out_of_range outside [0, capacity).
  BitString encode(const BigInt& index) const;

  // String to index; empty when some block lacks a 00 or a 11.  Throws on
  // length mismatch.
  std::optional<BigInt> decode(const BitString& x) const;

 private:
  // Suffix counts for the block walk, indexed by position then packed
  // state (last bit, 00 seen, 11 seen).
  unsigned __int128 completions(std::size_t pos, unsigned state) const;
  std::size_t n_ = 0;
  unsigned delta_ = 0;
  std::size_t blocks_ = 0;
  std::size_t residual_ = 0;
  BigInt q_;
  BigInt capacity_;
  std::vector<unsigned __int128> counts_;  // (delta_+1) x 8
};

// Convenience wrappers driven by CodeParams (n and d).
BitString reg_enc(const BigInt& index, const CodeParams& params);
std::optional<BigInt> reg_dec(const BitString& x, const CodeParams& params);

}  // namespace delcode
