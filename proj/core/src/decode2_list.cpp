#include "delcode/decode2_list.hpp"

#include <algorithm>
#include <cmath>

#include "delcode/detail/profile.hpp"

namespace delcode {

namespace detail {

bool spread_hypothesis(const std::vector<std::uint64_t>& a,
                       const std::vector<std::uint64_t>& b, std::uint64_t t) {
  if (a.size() != b.size()) return false;
  std::uint64_t sa = 0, sb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (a[i] < b[i] && b[i] > t) return false;
    if (a[i] > b[i] && b[i] < t) return false;
  }
  return sa == sb;
}

bool spread_hypothesis(const std::vector<std::uint64_t>& a,
                       const std::vector<std::uint64_t>& b) {
  if (a.size() != b.size()) return false;
  // Raised entries of b must all sit at or below every lowered one; when
  // that holds, any value between the two extremes is a valid threshold.
  bool any_raised = false;
  std::uint64_t hi = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) {
      any_raised = true;
      hi = std::max(hi, b[i]);
    }
  }
  return spread_hypothesis(a, b, any_raised ? hi : 0);
}

std::uint64_t spread_weight(const std::vector<std::uint64_t>& v) {
  std::uint64_t w = 0;
  for (std::uint64_t x : v) w += x * (x - (x > 0 ? 1 : 0));
  return w;
}

}  // namespace detail

using detail::analyze_pair;
using detail::apply_pair;
using detail::lift_residue;
using detail::PairEffect;
using detail::YProfile;

namespace {

std::uint64_t isqrt_u64(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

DecodeResult<std::vector<BitString>> decode_list2(const BitString& y,
                                                  const SketchBundle& bundle) {
  using R = DecodeResult<std::vector<BitString>>;
  const CodeParams& prm = bundle.params;
  if (prm.variant != SketchVariant::list2)
    return R::failure(DecodeStatus::bad_input);
  if (y.size() + 2 != prm.n) return R::failure(DecodeStatus::bad_input);
  if (bundle.f1r >= prm.mod_f1r || bundle.f2r >= prm.mod_f2r ||
      bundle.runs5 >= 5)
    return R::failure(DecodeStatus::bad_input);

  const YProfile p(y);
  const std::size_t m = p.m;

  // Two insertions add 0, 2, or 4 runs, distinct mod 5.
  const unsigned delta =
      static_cast<unsigned>((bundle.runs5 + 5 - p.runs % 5) % 5);
  if (delta != 0 && delta != 2 && delta != 4)
    return R::failure(DecodeStatus::no_placement);

  const std::uint64_t s = lift_residue(bundle.f1r, prm.mod_f1r, p.f1r) - p.f1r;
  const std::uint64_t q = lift_residue(bundle.f2r, prm.mod_f2r, p.f2r) - p.f2r;

  std::vector<BitString> found;
  // Every enumerated placement is built to hit the rank-sum raise s with
  // run delta `delta` exactly; the pair-sum raise q is the open filter.
  auto admit = [&](std::size_t gl, int bl, std::size_t gr, int br) {
    const PairEffect e = analyze_pair(p, gl, bl, gr, br);
    if (e.run_delta() != delta)
      throw internal_error(
          "decode_list2: placement changes the wrong number of runs");
    if (e.df1r != s)
      throw internal_error(
          "decode_list2: placement misses the rank-sum target");
    if (e.df2r == q) found.push_back(apply_pair(y, gl, bl, gr, br));
  };
  const auto inc = [&](std::size_t g) -> std::uint64_t {
    return p.rank[g] + 1 + 2 * static_cast<std::uint64_t>(m + 1 - g);
  };

  if (delta == 0) {
    // Both insertions extend runs, of ranks rho1 <= rho2 with
    // rho1 + rho2 = s and C(rho1,2) + C(rho2,2) = q; eliminating one
    // unknown leaves a quadratic with product (s^2 - s - 2q)/2.
    if (s * s >= s + 2 * q && (s * s - s - 2 * q) % 2 == 0) {
      const std::uint64_t prod = (s * s - s - 2 * q) / 2;
      if (4 * prod <= s * s) {
        const std::uint64_t disc = s * s - 4 * prod;
        const std::uint64_t root = isqrt_u64(disc);
        if (root * root == disc && root <= s && (s - root) % 2 == 0) {
          const std::uint64_t rho1 = (s - root) / 2;
          const std::uint64_t rho2 = (s + root) / 2;
          if (rho2 <= p.runs)
            admit(p.run_gap_lo[static_cast<std::size_t>(rho1)],
                  static_cast<int>(rho1 % 2),
                  p.run_gap_hi[static_cast<std::size_t>(rho2)],
                  static_cast<int>(rho2 % 2));
        }
      }
    }
  } else if (delta == 4) {
    // Both insertions create runs; a creating insert at gap g raises the
    // rank sum by inc(g), plus 2 for the left one shifting past the right.
    // inc strictly decreases rightward, so matching pairs come from a
    // two-pointer walk over the creating gaps.
    if (s >= 2) {
      const std::uint64_t target = s - 2;
      std::vector<std::size_t> cg;
      for (std::size_t g = 0; g <= m; ++g)
        if (p.bit_ext(static_cast<long long>(g)) ==
            p.bit_ext(static_cast<long long>(g) + 1))
          cg.push_back(g);
      std::size_t i = 0, j = cg.size();
      while (j > i + 1) {
        const std::uint64_t sum = inc(cg[i]) + inc(cg[j - 1]);
        if (sum == target) {
          admit(cg[i], 1 - p.bit_ext(static_cast<long long>(cg[i])), cg[j - 1],
                1 - p.bit_ext(static_cast<long long>(cg[j - 1])));
          ++i;
          --j;
        } else if (sum > target) {
          ++i;
        } else {
          --j;
        }
      }
    }
  } else {
    // One creating insert, one run-extending.  Three shapes per gap:
    // the pair (1-y_g, y_g) dropped together at any gap g, a creating bit
    // with the extender somewhere to its left, and a creating bit with the
    // extender somewhere to its right.
    for (std::size_t g = 0; g <= m; ++g) {
      const std::uint64_t need = inc(g) + 2;
      if (s < need) continue;
      if (s - need == p.rank[g]) {
        const int bg = p.bit_ext(static_cast<long long>(g));
        admit(g, 1 - bg, g, bg);
      }
    }
    for (std::size_t g = 0; g <= m; ++g) {
      if (p.bit_ext(static_cast<long long>(g)) !=
          p.bit_ext(static_cast<long long>(g) + 1))
        continue;
      const int bc = 1 - p.bit_ext(static_cast<long long>(g));
      if (s >= inc(g)) {
        const std::uint64_t rho = s - inc(g);
        if (rho <= p.runs &&
            p.run_gap_lo[static_cast<std::size_t>(rho)] <= g)
          admit(std::min<std::size_t>(
                    p.run_gap_hi[static_cast<std::size_t>(rho)], g),
                static_cast<int>(rho % 2), g, bc);
        if (rho == static_cast<std::uint64_t>(p.rank[g]) + 1)
          admit(g, bc, g, bc);
      }
      if (s >= inc(g) + 2) {
        const std::uint64_t rho = s - inc(g) - 2;
        if (rho <= p.runs && p.run_gap_hi[static_cast<std::size_t>(rho)] > g)
          admit(g, bc, p.run_gap_hi[static_cast<std::size_t>(rho)],
                static_cast<int>(rho % 2));
      }
    }
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  if (found.size() > 2)
    throw internal_error("decode_list2: more than two strings match");
  if (found.empty()) return R::failure(DecodeStatus::no_placement);
  return R::success(std::move(found));
}

}  // namespace delcode
