#include "delcode/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "delcode/decode1.hpp"
#include "delcode/decode2_list.hpp"
#include "delcode/decode2_unique.hpp"

namespace delcode {

namespace detail {

std::size_t lcs_length(const BitString& a, const BitString& b) {
  const std::size_t la = a.size(), lb = b.size();
  std::vector<std::size_t> prev(lb + 1, 0), cur(lb + 1, 0);
  for (std::size_t i = 1; i <= la; ++i) {
    for (std::size_t j = 1; j <= lb; ++j) {
      if (a[i - 1] == b[j - 1])
        cur[j] = prev[j - 1] + 1;
      else
        cur[j] = std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[lb];
}

bool lcs_at_least(const BitString& a, const BitString& b, std::size_t t) {
  const std::size_t n = a.size();
  if (b.size() != n)
    throw std::invalid_argument("lcs_at_least: strings must have equal length");
  if (t == 0) return true;
  if (t > n) return false;

  // LCS >= t is equivalent to insert/delete distance <= 2(n-t).  A path of
  // that cost through cell (i, j) pays at least 2|i-j|, so the scan can
  // stay inside the band |i-j| <= n-t.
  const std::size_t w = n - t;
  const std::uint64_t limit = 2 * static_cast<std::uint64_t>(w);
  const std::uint64_t inf = limit + 1;
  const std::size_t width = 2 * w + 1;

  std::vector<std::uint64_t> prev(width, inf), cur(width, inf);
  for (std::size_t s = 0; s < width; ++s) {
    // slot s in row i holds column j = i + s - w
    if (s >= w) prev[s] = std::min<std::uint64_t>(s - w, inf);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t s = 0; s < width; ++s) {
      long long j = static_cast<long long>(i) + static_cast<long long>(s) -
                    static_cast<long long>(w);
      if (j < 0 || j > static_cast<long long>(n)) {
        cur[s] = inf;
        continue;
      }
      if (j == 0) {
        cur[s] = std::min<std::uint64_t>(i, inf);
        continue;
      }
      std::uint64_t best = inf;
      if (prev[s] < inf && a[i - 1] == b[static_cast<std::size_t>(j) - 1])
        best = std::min(best, prev[s]);
      if (s + 1 < width && prev[s + 1] < inf)
        best = std::min(best, prev[s + 1] + 1);
      if (s >= 1 && cur[s - 1] < inf) best = std::min(best, cur[s - 1] + 1);
      cur[s] = std::min(best, inf);
    }
    std::swap(prev, cur);
  }
  return prev[w] <= limit;
}

}  // namespace detail

std::vector<BitString> brute_decode(const BitString& y,
                                    const SketchBundle& bundle) {
  const std::size_t n = bundle.params.n;
  if (n < y.size() + 1 || n > y.size() + 2)
    throw std::invalid_argument(
        "brute_decode: bundle length must exceed |y| by 1 or 2");
  const unsigned k = static_cast<unsigned>(n - y.size());
  std::vector<BitString> out;
  for (const BitString& x : supersequences(y, k))
    if (delcode::bundle(x, bundle.params) == bundle) out.push_back(x);
  return out;
}

std::vector<BitString> greedy_code(std::size_t n, unsigned k) {
  if (n > 16) throw std::invalid_argument("greedy_code: n > 16");
  const long long need = static_cast<long long>(n) - static_cast<long long>(k);
  std::vector<BitString> code;
  for (std::uint64_t v = 0; v < (1ull << n); ++v) {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i)
      bits[i] = static_cast<std::uint8_t>((v >> (n - 1 - i)) & 1);
    BitString x(std::move(bits));
    bool keep = true;
    for (const BitString& c : code) {
      if (need <= 0 ||
          detail::lcs_length(c, x) >= static_cast<std::size_t>(need)) {
        keep = false;
        break;
      }
    }
    if (keep) code.push_back(std::move(x));
  }
  return code;
}

bool verify_code(const std::vector<BitString>& code, unsigned k) {
  if (code.size() < 2) return true;
  const std::size_t n = code.front().size();
  for (const BitString& c : code)
    if (c.size() != n)
      throw std::invalid_argument("verify_code: unequal codeword lengths");
  const long long need = static_cast<long long>(n) - static_cast<long long>(k);
  if (need <= 0) return false;
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j)
      if (detail::lcs_at_least(code[i], code[j],
                               static_cast<std::size_t>(need)))
        return false;
  return true;
}

namespace {

BitString string_from_index(std::uint64_t v, std::size_t len) {
  std::vector<std::uint8_t> bits(len);
  for (std::size_t i = 0; i < len; ++i)
    bits[i] = static_cast<std::uint8_t>((v >> (len - 1 - i)) & 1);
  return BitString(std::move(bits));
}

// Buckets the supersequences of y by their serialized bundle and runs the
// structured decoder once per bucket.
void grid_for_y(const BitString& y, const CodeParams& params,
                GridReport& report) {
  const unsigned k = static_cast<unsigned>(params.n - y.size());
  std::map<std::string, std::vector<BitString>> buckets;
  for (const BitString& x : supersequences(y, k)) {
    auto bytes = serialize_bundle(bundle(x, params));
    buckets[std::string(bytes.begin(), bytes.end())].push_back(x);
  }
  for (auto& [key, xs] : buckets) {
    (void)key;
    const SketchBundle b = bundle(xs.front(), params);
    ++report.cases;
    switch (params.variant) {
      case SketchVariant::vt1: {
        auto r = decode_vt(y, b.f1);
        if (xs.size() != 1 || !r.ok() || *r != xs.front()) ++report.failures;
        break;
      }
      case SketchVariant::run1: {
        auto r = decode_run1(y, b.f1r);
        if (xs.size() != 1 || !r.ok() || *r != xs.front()) ++report.failures;
        break;
      }
      case SketchVariant::list2: {
        auto r = decode_list2(y, b);
        if (!r.ok() || *r != xs) ++report.failures;
        break;
      }
      case SketchVariant::unique2: {
        auto r = decode_unique2(y, b);
        if (xs.size() != 1 || !r.ok() || *r != xs.front()) ++report.failures;
        break;
      }
    }
  }
}

}  // namespace

GridReport verify_variant_grid(std::size_t n, SketchVariant variant,
                               unsigned jobs) {
  const CodeParams params = CodeParams::make(n, variant);
  const unsigned k = (variant == SketchVariant::vt1 ||
                      variant == SketchVariant::run1)
                         ? 1
                         : 2;
  if (n < k + 1)
    throw std::invalid_argument("verify_variant_grid: n too small");
  if (n - k > 30)
    throw std::invalid_argument("verify_variant_grid: grid too large");
  const std::uint64_t total = 1ull << (n - k);
  if (jobs == 0) jobs = 1;
  jobs = static_cast<unsigned>(
      std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(total, 1)));

  std::vector<GridReport> parts(jobs);
  auto worker = [&](unsigned id) {
    for (std::uint64_t v = id; v < total; v += jobs)
      grid_for_y(string_from_index(v, n - k), params, parts[id]);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (auto& th : pool) th.join();
  }
  GridReport merged;
  for (const GridReport& part : parts) {
    merged.cases += part.cases;
    merged.failures += part.failures;
  }
  return merged;
}

DeltaRanges sketch_delta_ranges(std::size_t n, unsigned k) {
  if (n < k + 1 || n - k > 30)
    throw std::invalid_argument("sketch_delta_ranges: size out of range");
  DeltaRanges r;
  const std::uint64_t total = 1ull << (n - k);
  for (std::uint64_t v = 0; v < total; ++v) {
    const BitString y = string_from_index(v, n - k);
    const PositionSketch py = position_sketch(y);
    const RunSketch ry = run_sketch(y);
    for (const BitString& x : supersequences(y, k)) {
      const PositionSketch px = position_sketch(x);
      const RunSketch rx = run_sketch(x);
      r.df1 = std::max(r.df1, px.f1 - py.f1);
      r.df2 = std::max(r.df2, px.f2 - py.f2);
      r.df1r = std::max(r.df1r, rx.f1r - ry.f1r);
      r.df2r = std::max(r.df2r, rx.f2r - ry.f2r);
    }
  }
  return r;
}

}  // namespace delcode
