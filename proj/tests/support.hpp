#pragma once

// Helpers shared by the unit suites and the acceptance gate: seeded random
// inputs plus the instrumented scan checks behind the structural decoder
// arguments.  Each checker returns a violation count so callers can
// aggregate over many random instances.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "delcode/bitstring.hpp"
#include "delcode/decode2_unique.hpp"
#include "delcode/detail/profile.hpp"

namespace testsupport {

using delcode::BitString;

inline BitString random_bits(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) b = static_cast<std::uint8_t>(rng() & 1);
  return BitString(std::move(v));
}

// k distinct 1-based positions, sorted.
inline std::vector<std::size_t> random_positions(std::mt19937_64& rng,
                                                 std::size_t n,
                                                 std::size_t k) {
  std::vector<std::size_t> pos;
  while (pos.size() < k) {
    std::size_t p = rng() % n + 1;
    if (std::find(pos.begin(), pos.end(), p) == pos.end()) pos.push_back(p);
  }
  std::sort(pos.begin(), pos.end());
  return pos;
}

// Splits the two-run profile entries by which inserted bit opens the new
// run, then walks each family in its own leftward sweep: creator 1s in
// descending g1 against the A1 reading, creator 0s in descending g0
// against A0.  Within a family the reading never decreases, and it must
// strictly grow whenever the sweep passes an adjacent equal pair (11 for
// the 1 family, 00 for the 0 family).
inline unsigned pseudorank_monotonicity_violations(const BitString& y,
                                                   std::uint64_t f1_target) {
  auto profile = delcode::pseudorank_profile(y, f1_target);
  delcode::detail::YProfile yp(y);
  std::vector<const delcode::PseudorankEntry*> ones, zeros;
  for (const auto& e : profile.entries) {
    if (e.run_delta != 2) continue;
    delcode::detail::PairEffect eff =
        e.zero_on_right ? delcode::detail::analyze_pair(yp, e.g1, 1, e.g0, 0)
                        : delcode::detail::analyze_pair(yp, e.g0, 0, e.g1, 1);
    bool left_creates = eff.runs_left == 2;
    if (left_creates == e.zero_on_right)  // the 1 sits left iff the 0 is right
      ones.push_back(&e);
    else
      zeros.push_back(&e);
  }
  unsigned bad = 0;
  std::sort(ones.begin(), ones.end(),
            [](const auto* a, const auto* b) { return a->g1 < b->g1; });
  for (std::size_t i = ones.size(); i-- > 1;) {
    const auto* prev = ones[i];      // larger g1, earlier in move order
    const auto* next = ones[i - 1];  // the 1 has moved left
    if (next->a1 < prev->a1) ++bad;
    bool passed_11 = false;
    for (std::size_t j = next->g1 + 1; j + 1 <= prev->g1; ++j)
      if (y.bit(static_cast<long long>(j)) == 1 &&
          y.bit(static_cast<long long>(j + 1)) == 1)
        passed_11 = true;
    if (passed_11 && next->a1 <= prev->a1) ++bad;
  }
  std::sort(zeros.begin(), zeros.end(),
            [](const auto* a, const auto* b) { return a->g0 < b->g0; });
  for (std::size_t i = zeros.size(); i-- > 1;) {
    const auto* prev = zeros[i];
    const auto* next = zeros[i - 1];
    if (next->a0 < prev->a0) ++bad;
    bool passed_00 = false;
    for (std::size_t j = next->g0 + 1; j + 1 <= prev->g0; ++j)
      if (y.bit(static_cast<long long>(j)) == 0 &&
          y.bit(static_cast<long long>(j + 1)) == 0)
        passed_00 = true;
    if (passed_00 && next->a0 <= prev->a0) ++bad;
  }
  return bad;
}

// Along the same move order, compares consecutive entries that realize
// distinct strings and share a lead: while the 0 sits left of the 1 the
// pair sum f2 must strictly drop at each move, and once the 1 leads it
// must strictly grow.
inline unsigned overtake_sign_violations(const BitString& y,
                                         std::uint64_t f1_target) {
  auto profile = delcode::pseudorank_profile(y, f1_target);
  const auto& es = profile.entries;
  unsigned bad = 0;
  bool have_prev = false;
  delcode::PseudorankEntry prev{};
  BitString prev_str;
  for (std::size_t i = es.size(); i-- > 0;) {
    BitString cur = delcode::profile_candidate(y, es[i]);
    if (have_prev && cur != prev_str &&
        es[i].zero_on_right == prev.zero_on_right) {
      if (!prev.zero_on_right) {
        if (!(es[i].f2 < prev.f2)) ++bad;
      } else {
        if (!(es[i].f2 > prev.f2)) ++bad;
      }
    }
    prev = es[i];
    prev_str = std::move(cur);
    have_prev = true;
  }
  return bad;
}

// Checks the pricing behind the run-creating scans: the per-gap rank
// charge inc(g) strictly falls across creating gaps left to right, and
// among separated creating pairs of equal charge sum the rank pair sum
// strictly falls as the pair spreads apart.
inline unsigned spread_monotonicity_violations(const BitString& y) {
  delcode::detail::YProfile p(y);
  const std::size_t m = p.m;
  std::vector<std::size_t> cg;
  for (std::size_t g = 0; g <= m; ++g)
    if (p.bit_ext(static_cast<long long>(g)) ==
        p.bit_ext(static_cast<long long>(g) + 1))
      cg.push_back(g);
  auto inc = [&](std::size_t g) {
    return static_cast<std::uint64_t>(p.rank[g]) + 1 +
           2 * static_cast<std::uint64_t>(m + 1 - g);
  };
  unsigned bad = 0;
  for (std::size_t i = 1; i < cg.size(); ++i)
    if (!(inc(cg[i]) < inc(cg[i - 1]))) ++bad;

  // sum of charges -> (gl descending = spread increasing, df2r)
  std::map<std::uint64_t, std::vector<std::pair<std::size_t, std::uint64_t>>>
      groups;
  for (std::size_t i = 0; i < cg.size(); ++i) {
    for (std::size_t j = i + 1; j < cg.size(); ++j) {
      int bl = 1 - p.bit_ext(static_cast<long long>(cg[i]));
      int br = 1 - p.bit_ext(static_cast<long long>(cg[j]));
      auto eff = delcode::detail::analyze_pair(p, cg[i], bl, cg[j], br);
      if (eff.run_delta() != 4) {
        ++bad;
        continue;
      }
      groups[inc(cg[i]) + inc(cg[j])].push_back({cg[i], eff.df2r});
    }
  }
  for (auto& [sum, v] : groups) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t i = 1; i < v.size(); ++i)
      if (!(v[i].second < v[i - 1].second)) ++bad;
  }
  return bad;
}

struct ScanShape {
  unsigned vshape = 0;        // order breaks in the down-then-up pattern
  unsigned multiplicity = 0;  // a rank pair sum value hit more than twice
};

// Enumerates every insertion pair into y that raises the run count by two
// and the rank sum by exactly s, dedupes by realized string in scan order
// (run-creating gap right to left), and checks that the rank pair sums
// first strictly fall, then strictly rise; in particular no value may
// appear more than twice.
inline ScanShape scan_shape_violations(const BitString& y, std::uint64_t s) {
  delcode::detail::YProfile p(y);
  const std::size_t m = p.m;
  struct Cand {
    std::size_t creator;
    std::size_t other;
    std::uint64_t df2r;
    BitString str;
  };
  std::vector<Cand> cands;
  for (std::size_t gl = 0; gl <= m; ++gl)
    for (std::size_t gr = gl; gr <= m; ++gr)
      for (int bl = 0; bl < 2; ++bl)
        for (int br = 0; br < 2; ++br) {
          auto eff = delcode::detail::analyze_pair(p, gl, bl, gr, br);
          if (eff.run_delta() != 2 || eff.df1r != s) continue;
          std::size_t creator = eff.runs_left == 2 ? gl : gr;
          std::size_t other = eff.runs_left == 2 ? gr : gl;
          cands.push_back({creator, other, eff.df2r,
                           delcode::detail::apply_pair(y, gl, bl, gr, br)});
        }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a,
                                                  const Cand& b) {
    if (a.creator != b.creator) return a.creator > b.creator;
    return a.other > b.other;
  });
  std::vector<std::uint64_t> seq;
  std::vector<BitString> seen;
  for (const auto& c : cands) {
    if (std::find(seen.begin(), seen.end(), c.str) != seen.end()) continue;
    seen.push_back(c.str);
    seq.push_back(c.df2r);
  }

  ScanShape out;
  std::map<std::uint64_t, unsigned> mult;
  for (auto v : seq)
    if (++mult[v] > 2) ++out.multiplicity;
  // longest strictly-down prefix, then demand strictly-up for the rest
  std::size_t i = 1;
  while (i < seq.size() && seq[i] < seq[i - 1]) ++i;
  for (; i < seq.size(); ++i)
    if (!(seq[i] > seq[i - 1])) ++out.vshape;
  return out;
}

}  // namespace testsupport
