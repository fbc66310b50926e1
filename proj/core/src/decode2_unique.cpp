#include "delcode/decode2_unique.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "delcode/detail/profile.hpp"

namespace delcode {

using detail::analyze_pair;
using detail::apply_pair;
using detail::lift_residue;
using detail::PairEffect;
using detail::YProfile;

namespace {

// Gaps with exactly u ones to their right form a contiguous stretch
// [plateau_lo, plateau_hi]; a 0 inserted anywhere inside realizes the same
// string, so one representative per stretch covers all placements.
std::size_t plateau_lo(const YProfile& p, std::size_t u) {
  return p.one_pos[p.ones - u];
}

std::size_t plateau_hi(const YProfile& p, std::size_t u) {
  return u == 0 ? p.m : p.one_pos[p.ones - u + 1] - 1;
}

void sort_dedupe(std::vector<BitString>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

PseudorankProfile pseudorank_profile(const BitString& y,
                                     std::uint64_t f1_target) {
  const YProfile p(y);
  PseudorankProfile out;
  out.y = y;
  out.f1_target = f1_target;
  if (f1_target < p.f1) return out;
  const std::uint64_t D = f1_target - p.f1;
  const std::size_t m = p.m;
  const std::size_t w = p.ones;

  for (std::size_t g1 = 0; g1 <= m; ++g1) {
    const std::uint64_t oa1 = p.ones_after(g1);
    const std::uint64_t base = g1 + 1 + oa1;
    if (D < base) continue;

    PseudorankEntry e;
    e.g1 = g1;
    PairEffect eff;
    if (D - base <= oa1) {
      // the 0 sits at or right of the 1 and sees D - base ones after it
      const auto u = static_cast<std::size_t>(D - base);
      const std::size_t g0 = std::max(plateau_lo(p, u), g1);
      if (g0 > plateau_hi(p, u)) continue;
      e.zero_on_right = true;
      e.g0 = g0;
      e.pos1 = g1 + 1;
      e.pos0 = g0 + 2;
      eff = analyze_pair(p, g1, 1, g0, 0);
    } else {
      // the 0 sits left of the 1; the inserted 1 adds one to its count
      const std::uint64_t u_left = D - base - 1;
      if (u_left < oa1 || u_left > w) continue;
      const auto u = static_cast<std::size_t>(u_left);
      const std::size_t g0 = std::min(plateau_hi(p, u), g1);
      if (g0 < plateau_lo(p, u)) continue;
      e.zero_on_right = false;
      e.g0 = g0;
      e.pos0 = g0 + 1;
      e.pos1 = g1 + 2;
      eff = analyze_pair(p, g0, 0, g1, 1);
    }
    e.a1 = p.f1r + 2 * static_cast<std::uint64_t>(m - e.g1 + 1) +
           eff.rank_left + eff.rank_right;
    e.a0 = p.f1r + 2 * static_cast<std::uint64_t>(m - e.g0 + 1) +
           eff.rank_left + eff.rank_right;
    e.run_delta = eff.run_delta();
    e.f1r = p.f1r + eff.df1r;
    e.f2 = p.f2 + eff.df2;
    out.entries.push_back(e);
  }
  return out;
}

BitString profile_candidate(const BitString& y, const PseudorankEntry& e) {
  return e.zero_on_right ? apply_pair(y, e.g1, 1, e.g0, 0)
                         : apply_pair(y, e.g0, 0, e.g1, 1);
}

LocalizeOutcome localize(const PseudorankProfile& profile,
                         std::uint64_t f1r_target, std::uint64_t f2_target,
                         const CodeParams& params) {
  std::vector<const PseudorankEntry*> kept;
  for (const auto& e : profile.entries)
    if (e.run_delta == 2 && (e.a1 == f1r_target || e.a0 == f1r_target) &&
        e.f2 == f2_target)
      kept.push_back(&e);

  LocalizeOutcome out;
  if (kept.empty()) {
    out.status = DecodeStatus::no_placement;
    return out;
  }

  std::vector<BitString> cands;
  cands.reserve(kept.size());
  for (const auto* e : kept) cands.push_back(profile_candidate(profile.y, *e));
  sort_dedupe(cands);
  if (cands.size() == 1) {
    out.status = DecodeStatus::ok;
    out.unique = std::move(cands.front());
    return out;
  }

  Localization loc;
  loc.lo = std::numeric_limits<std::size_t>::max();
  loc.hi = 0;
  for (const auto* e : kept) {
    loc.lo = std::min({loc.lo, e->pos1, e->pos0});
    loc.hi = std::max({loc.hi, e->pos1, e->pos0});
  }
  loc.candidates = std::move(cands);
  const std::size_t limit =
      params.blocks ? 2 * static_cast<std::size_t>(params.blocks->length)
                    : std::numeric_limits<std::size_t>::max();
  out.status = loc.width() > limit ? DecodeStatus::regularity_violation
                                   : DecodeStatus::ok;
  out.interval = std::move(loc);
  return out;
}

BitString disambiguate_blocks(const std::vector<BitString>& candidates,
                              const SketchBundle& bundle_ref) {
  if (candidates.empty())
    throw std::invalid_argument("disambiguate_blocks: no candidates");
  const BitString* hit = nullptr;
  for (const auto& c : candidates) {
    if (bundle(c, bundle_ref.params) == bundle_ref) {
      if (hit != nullptr)
        throw internal_error(
            "disambiguate_blocks: several candidates carry the same sketches");
      hit = &c;
    }
  }
  if (hit == nullptr)
    throw internal_error("disambiguate_blocks: no candidate matches");
  return *hit;
}

DecodeResult<BitString> decode_same_bits(const BitString& y,
                                         std::uint64_t f1_target,
                                         std::uint64_t f2_target, int bit) {
  using R = DecodeResult<BitString>;
  if (bit != 0 && bit != 1) return R::failure(DecodeStatus::bad_input);
  const YProfile p(y);
  if (f1_target < p.f1 || f2_target < p.f2)
    return R::failure(DecodeStatus::no_placement);
  const std::uint64_t D = f1_target - p.f1;
  const std::uint64_t q2 = f2_target - p.f2;
  const std::size_t m = p.m;
  const std::size_t w = p.ones;

  std::vector<BitString> found;
  auto admit = [&](std::size_t gl, std::size_t gr) {
    const PairEffect e = analyze_pair(p, gl, bit, gr, bit);
    if (e.df1 != D)
      throw internal_error("decode_same_bits: position-sum mismatch");
    if (e.df2 == q2) found.push_back(apply_pair(y, gl, bit, gr, bit));
  };

  if (bit == 0) {
    // Each 0 adds the count of ones to its right; split D into
    // jl + jr with jl >= jr and place both at their plateaus.
    const std::uint64_t top = std::min<std::uint64_t>(w, D);
    for (std::uint64_t jl = (D + 1) / 2; jl <= top; ++jl) {
      const std::uint64_t jr = D - jl;
      admit(plateau_hi(p, static_cast<std::size_t>(jl)),
            plateau_hi(p, static_cast<std::size_t>(jr)));
    }
  } else {
    // A left 1 at gap g adds g+1+oa(g) plus one for the right 1 passing
    // over it; a right 1 at gap g adds g+1+oa(g).  Both grow by unit
    // steps, so each gl pins the right side to one plateau.
    auto psi = [&](std::size_t g) -> std::uint64_t {
      return static_cast<std::uint64_t>(g) + 2 + p.ones_after(g);
    };
    for (std::size_t gl = 0; gl <= m; ++gl) {
      const std::uint64_t leftc =
          static_cast<std::uint64_t>(gl) + 1 + p.ones_after(gl) + 1;
      if (leftc > D) break;  // non-decreasing in gl
      const std::uint64_t target = D - leftc + 1;
      if (psi(gl) > target || psi(m) < target) continue;
      std::size_t lo = gl, hi = m;
      while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (psi(mid) < target)
          lo = mid + 1;
        else
          hi = mid;
      }
      if (psi(lo) == target) admit(gl, lo);
    }
  }

  sort_dedupe(found);
  if (found.size() > 1)
    throw internal_error("decode_same_bits: several strings fit both sums");
  if (found.empty()) return R::failure(DecodeStatus::no_placement);
  return R::success(std::move(found.front()));
}

DecodeResult<BitString> decode_04_runs(const BitString& y,
                                       std::uint64_t f1_target,
                                       std::uint64_t f1r_target,
                                       unsigned run_delta) {
  using R = DecodeResult<BitString>;
  if (run_delta != 0 && run_delta != 4)
    return R::failure(DecodeStatus::bad_input);
  const YProfile p(y);
  if (f1_target < p.f1 || f1r_target < p.f1r)
    return R::failure(DecodeStatus::no_placement);
  const std::uint64_t D = f1_target - p.f1;
  const std::uint64_t s = f1r_target - p.f1r;
  const std::size_t m = p.m;

  std::vector<BitString> found;
  auto admit = [&](std::size_t gl, int bl, std::size_t gr, int br) {
    const PairEffect e = analyze_pair(p, gl, bl, gr, br);
    if (e.run_delta() != run_delta)
      throw internal_error("decode_04_runs: run-count mismatch");
    if (e.df1r != s) throw internal_error("decode_04_runs: rank-sum mismatch");
    if (e.df1 == D) found.push_back(apply_pair(y, gl, bl, gr, br));
  };

  if (run_delta == 0) {
    // Run-extending bits carry their run's parity, so one 0 and one 1
    // force ranks of opposite parity: s must be odd.
    if (s % 2 == 1) {
      for (std::uint64_t r1 = 0; 2 * r1 <= s; ++r1) {
        const std::uint64_t r2 = s - r1;
        if (r2 > p.runs) continue;
        admit(p.run_gap_lo[static_cast<std::size_t>(r1)],
              static_cast<int>(r1 % 2),
              p.run_gap_hi[static_cast<std::size_t>(r2)],
              static_cast<int>(r2 % 2));
      }
    }
  } else if (s >= 2) {
    const std::uint64_t target = s - 2;
    const auto inc = [&](std::size_t g) -> std::uint64_t {
      return p.rank[g] + 1 + 2 * static_cast<std::uint64_t>(m + 1 - g);
    };
    std::vector<std::size_t> cg;
    for (std::size_t g = 0; g <= m; ++g)
      if (p.bit_ext(static_cast<long long>(g)) ==
          p.bit_ext(static_cast<long long>(g) + 1))
        cg.push_back(g);
    std::size_t i = 0, j = cg.size();
    while (j > i + 1) {
      const std::uint64_t sum = inc(cg[i]) + inc(cg[j - 1]);
      if (sum == target) {
        const int bl = 1 - p.bit_ext(static_cast<long long>(cg[i]));
        const int br = 1 - p.bit_ext(static_cast<long long>(cg[j - 1]));
        // only pairs inserting one 0 and one 1 belong to this case
        if (bl != br) admit(cg[i], bl, cg[j - 1], br);
        ++i;
        --j;
      } else if (sum > target) {
        ++i;
      } else {
        --j;
      }
    }
  }

  sort_dedupe(found);
  if (found.size() > 1)
    throw internal_error("decode_04_runs: several strings fit both sums");
  if (found.empty()) return R::failure(DecodeStatus::no_placement);
  return R::success(std::move(found.front()));
}

DecodeResult<BitString> decode_unique2(const BitString& y,
                                       const SketchBundle& b,
                                       const DecodeOptions& options) {
  using R = DecodeResult<BitString>;
  const CodeParams& prm = b.params;
  if (prm.variant != SketchVariant::unique2)
    return R::failure(DecodeStatus::bad_input);
  if (y.size() + 2 != prm.n) return R::failure(DecodeStatus::bad_input);
  if (b.f1 >= prm.mod_f1 || b.f2 >= prm.mod_f2 || b.f1r >= prm.mod_f1r ||
      b.ones3 >= 3 || b.runs5 >= 5 || !b.blocks)
    return R::failure(DecodeStatus::bad_input);

  const YProfile p(y);

  R result = [&]() -> R {
    const auto d_ones =
        static_cast<unsigned>((b.ones3 + 3u - p.ones % 3) % 3u);
    const auto run_delta =
        static_cast<unsigned>((b.runs5 + 5u - p.runs % 5) % 5u);
    if (run_delta != 0 && run_delta != 2 && run_delta != 4)
      return R::failure(DecodeStatus::no_placement);
    const std::uint64_t t1 = lift_residue(b.f1, prm.mod_f1, p.f1);
    const std::uint64_t t2 = lift_residue(b.f2, prm.mod_f2, p.f2);
    const std::uint64_t t1r = lift_residue(b.f1r, prm.mod_f1r, p.f1r);

    if (d_ones == 0) return decode_same_bits(y, t1, t2, 0);
    if (d_ones == 2) return decode_same_bits(y, t1, t2, 1);
    if (run_delta != 2) return decode_04_runs(y, t1, t1r, run_delta);

    // One 1 and one 0 lost, run count up by two: sweep the placements
    // consistent with the position sum, then cut by rank sum and pair sum.
    const PseudorankProfile prof = pseudorank_profile(y, t1);
    std::vector<BitString> cands;
    for (const auto& e : prof.entries)
      if (e.run_delta == 2 && e.f1r == t1r && e.f2 == t2)
        cands.push_back(profile_candidate(y, e));
    sort_dedupe(cands);
    if (cands.empty()) return R::failure(DecodeStatus::no_placement);
    if (cands.size() == 1) return R::success(std::move(cands.front()));

    // Survivors cluster inside a short window; the block sketches tell
    // them apart.
    const BitString* hit = nullptr;
    for (const auto& c : cands) {
      if (bundle(c, prm) == b) {
        if (hit != nullptr)
          throw internal_error(
              "decode_unique2: block sketches fail to separate candidates");
        hit = &c;
      }
    }
    if (hit == nullptr) return R::failure(DecodeStatus::inconsistent_bundle);
    return R::success(*hit);
  }();

  if (result.ok() && bundle(*result.value, prm) != b)
    result = R::failure(DecodeStatus::inconsistent_bundle);

  if (options.cross_check) {
    std::vector<BitString> brute;
    for (const auto& x : supersequences(y, 2))
      if (bundle(x, prm) == b) brute.push_back(x);
    if (brute.size() > 1)
      throw internal_error("decode_unique2: bundle matched by several strings");
    if (result.ok()) {
      if (brute.size() != 1 || brute.front() != *result.value)
        throw internal_error(
            "decode_unique2: cross-check disagrees with the decoder");
    } else if (!brute.empty()) {
      throw internal_error("decode_unique2: decoder missed a matching string");
    }
  }
  return result;
}

DecodeResult<BitString> decode_unique2_single(const BitString& y,
                                              const SketchBundle& b) {
  using R = DecodeResult<BitString>;
  const CodeParams& prm = b.params;
  if (prm.variant != SketchVariant::unique2)
    return R::failure(DecodeStatus::bad_input);
  if (y.size() + 1 != prm.n) return R::failure(DecodeStatus::bad_input);
  if (b.f1 >= prm.mod_f1 || b.f2 >= prm.mod_f2 || b.f1r >= prm.mod_f1r ||
      b.ones3 >= 3 || b.runs5 >= 5 || !b.blocks)
    return R::failure(DecodeStatus::bad_input);

  const YProfile p(y);
  const auto d_ones = static_cast<unsigned>((b.ones3 + 3u - p.ones % 3) % 3u);
  if (d_ones > 1) return R::failure(DecodeStatus::inconsistent_bundle);
  const std::uint64_t t1 = lift_residue(b.f1, prm.mod_f1, p.f1);
  const std::uint64_t D = t1 - p.f1;

  std::optional<BitString> cand;
  if (d_ones == 0) {
    // a 0 came out with D ones to its right
    if (D <= p.ones)
      cand = y.inserted(plateau_lo(p, static_cast<std::size_t>(D)) + 1, 0);
  } else {
    // a 1 at gap g adds g+1+oa(g), non-decreasing by unit steps
    auto psi = [&](std::size_t g) -> std::uint64_t {
      return static_cast<std::uint64_t>(g) + 1 + p.ones_after(g);
    };
    if (psi(0) <= D && D <= psi(p.m)) {
      std::size_t lo = 0, hi = p.m;
      while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (psi(mid) < D)
          lo = mid + 1;
        else
          hi = mid;
      }
      if (psi(lo) == D) cand = y.inserted(lo + 1, 1);
    }
  }

  if (!cand) return R::failure(DecodeStatus::no_placement);
  if (bundle(*cand, prm) != b)
    return R::failure(DecodeStatus::inconsistent_bundle);
  return R::success(std::move(*cand));
}

}  // namespace delcode
