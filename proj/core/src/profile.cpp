#include "delcode/detail/profile.hpp"

#include <stdexcept>

#include "delcode/params.hpp"
#include "delcode/result.hpp"

namespace delcode::detail {

YProfile::YProfile(BitString y_in) : y(std::move(y_in)) {
  m = y.size();
  rank.assign(m + 2, 0);
  rank_suf.assign(m + 3, 0);
  ones_upto.assign(m + 1, 0);
  onepos_upto.assign(m + 1, 0);
  one_pos.assign(1, 0);
  zero_pos.assign(1, 0);

  for (std::size_t i = 1; i <= m + 1; ++i) {
    rank[i] = rank[i - 1] +
              (y.bit(static_cast<long long>(i)) != y.bit(static_cast<long long>(i) - 1));
  }
  runs = rank[m + 1];
  for (std::size_t i = m + 1; i >= 1; --i) {
    rank_suf[i] = rank_suf[i + 1] + rank[i];
    f1r += rank[i];
    f2r += binom2(rank[i]);
  }
  for (std::size_t i = 1; i <= m; ++i) {
    ones_upto[i] = ones_upto[i - 1] + (y[i - 1] == 1);
    onepos_upto[i] = onepos_upto[i - 1] + (y[i - 1] == 1 ? i : 0);
    if (y[i - 1] == 1) {
      one_pos.push_back(i);
      f1 += i;
      f2 += binom2(i);
    } else {
      zero_pos.push_back(i);
    }
  }
  ones = one_pos.size() - 1;
  zeros = zero_pos.size() - 1;

  // Joining-gap range per run: a bit equal to run t's parity inserted at any
  // gap in [lo, hi] joins run t.  Virtual boundary runs (an empty leading
  // 0-run or trailing 1-run) get the single gap at the matching end.
  run_gap_lo.assign(runs + 1, m + 1);
  run_gap_hi.assign(runs + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    std::uint32_t t = rank[i];
    if (run_gap_lo[t] == m + 1) run_gap_lo[t] = i - 1;
    run_gap_hi[t] = i;
  }
  if (run_gap_lo[0] == m + 1) {
    run_gap_lo[0] = 0;
    run_gap_hi[0] = 0;
  }
  if (run_gap_lo[runs] == m + 1) {
    run_gap_lo[runs] = m;
    run_gap_hi[runs] = m;
  }
}

namespace {

// Runs created by splicing bit b between neighbors l and r: 0 when b merges
// into an adjacent equal bit, 2 when it differs from both.
inline std::uint32_t splice_delta(int l, int b, int r) {
  return static_cast<std::uint32_t>((l != b) + (b != r) - (l != r));
}

}  // namespace

SingleEffect analyze_single(const YProfile& p, std::size_t g, int b) {
  if (g > p.m) throw std::invalid_argument("analyze_single: gap out of range");
  const auto gl = static_cast<long long>(g);
  int lnb = p.bit_ext(gl);
  int rnb = p.bit_ext(gl + 1);
  SingleEffect e;
  e.runs_created = splice_delta(lnb, b, rnb);
  e.rank = p.rank[g] + (lnb != b ? 1 : 0);
  e.df1 = (b ? g + 1 : 0) + p.ones_after(g);
  // Ones shifted right by one each gain their old position in f2.
  e.df2 = (b ? binom2(g + 1) : 0) + p.one_pos_sum(g, p.m);
  e.df1r = e.rank + e.runs_created * (p.m - g + 1);
  e.df2r = binom2(e.rank) +
           e.runs_created * p.rank_sum_after(g) +
           binom2(e.runs_created) * (p.m - g + 1);
  return e;
}

PairEffect analyze_pair(const YProfile& p, std::size_t gl, int bl,
                        std::size_t gr, int br) {
  if (gl > gr) throw std::invalid_argument("analyze_pair: events out of order");
  if (gr > p.m) throw std::invalid_argument("analyze_pair: gap out of range");
  const std::uint64_t m = p.m;
  PairEffect e;

  // Right event first, into y itself.
  int lnbR = p.bit_ext(static_cast<long long>(gr));
  int rnbR = p.bit_ext(static_cast<long long>(gr) + 1);
  e.runs_right = splice_delta(lnbR, br, rnbR);
  std::uint64_t rankR0 = p.rank[gr] + (lnbR != br ? 1 : 0);

  // Left event into the intermediate string; only the right neighbor can
  // differ from y's, and only at a shared gap.
  int lnbL = p.bit_ext(static_cast<long long>(gl));
  int rnbL = gl == gr ? br : p.bit_ext(static_cast<long long>(gl) + 1);
  e.runs_left = splice_delta(lnbL, bl, rnbL);
  e.rank_left = p.rank[gl] + (lnbL != bl ? 1 : 0);
  e.rank_right = rankR0 + e.runs_left;

  e.df1r = e.rank_left + rankR0 + e.runs_right * (m - gr + 1) +
           e.runs_left * (m - gl + 2);

  // Rank shifts hit y-bits after gr (both events) plus the span (gl, gr]
  // (left event only); the right inserted bit also shifts with the left
  // event.  Each bit of shift d adds d*r + C(d,2) to its C(r,2) term.
  std::uint64_t sum_after_r = p.rank_sum_after(gr);
  std::uint64_t cnt_after_r = m - gr + 1;
  std::uint64_t sum_after_l_mid = sum_after_r + rankR0 + e.runs_right * cnt_after_r +
                                  (p.rank_suf[gl + 1] - p.rank_suf[gr + 1]);
  std::uint64_t cnt_after_l_mid = m - gl + 2;
  e.df2r = binom2(rankR0) + e.runs_right * sum_after_r +
           binom2(e.runs_right) * cnt_after_r + binom2(e.rank_left) +
           e.runs_left * sum_after_l_mid + binom2(e.runs_left) * cnt_after_l_mid;

  const std::uint64_t pl = gl + 1, pr = gr + 2;
  e.df1 = (bl ? pl : 0) + (br ? pr : 0) + p.ones_after(gl) + p.ones_after(gr);
  // Ones in (gl, gr] shift one position; ones after gr shift two.
  e.df2 = (bl ? binom2(pl) : 0) + (br ? binom2(pr) : 0) +
          p.one_pos_sum(gl, gr) +
          2 * p.one_pos_sum(gr, p.m) + p.ones_after(gr);
  return e;
}

BitString apply_pair(const BitString& y, std::size_t gl, int bl, std::size_t gr,
                     int br) {
  return y.inserted(gr + 1, br).inserted(gl + 1, bl);
}

std::uint64_t lift_residue(std::uint64_t residue, std::uint64_t modulus,
                           std::uint64_t base) {
  if (residue >= modulus)
    throw std::invalid_argument("lift_residue: residue not reduced");
  return base + (residue + modulus - base % modulus) % modulus;
}

}  // namespace delcode::detail
