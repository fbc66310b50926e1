#include "delcode/decode1.hpp"

#include "delcode/detail/profile.hpp"
#include "delcode/sketch.hpp"

namespace delcode {

namespace detail {

void vt_sweep(const BitString& y,
              const std::function<bool(const MovingBitState&)>& visit) {
  const std::size_t n = y.size() + 1;
  MovingBitState st;
  st.current = y.inserted(n, 0);
  st.pos = n;
  st.bit = 0;
  st.value = position_sketch(y).f1;
  if (!visit(st)) return;

  // Phase 1: drag the 0 left; passing a 1 raises f1 by one, passing a 0
  // changes nothing, so only stop at positions just left of each 1.
  for (std::size_t p = n; p-- > 1;) {
    if (st.current[p - 1] == 1) {
      st.current[p - 1] = 0;
      st.current[p] = 1;
      st.pos = p;
      st.value += 1;
      if (!visit(st)) return;
    } else {
      // Swapping two 0s: same string, only the tracked identity moves.
      st.pos = p;
    }
  }

  // The 0 now leads; flipping it to 1 raises every later state by one more.
  st.current = y.inserted(1, 1);
  st.pos = 1;
  st.bit = 1;
  st.value += 1;
  if (!visit(st)) return;

  // Phase 2: walk the 1 right past each 0.
  for (std::size_t p = 1; p < n; ++p) {
    if (st.current[p] == 0) {
      st.current[st.pos - 1] = 0;
      st.current[p] = 1;
      st.pos = p + 1;
      st.value += 1;
      if (!visit(st)) return;
    } else {
      st.pos = p + 1;
    }
  }
}

}  // namespace detail

DecodeResult<BitString> decode_vt(const BitString& y, std::uint64_t f1_residue) {
  const std::uint64_t n = y.size() + 1;
  if (f1_residue >= n + 1)
    return DecodeResult<BitString>::failure(DecodeStatus::bad_input);
  const std::uint64_t target =
      detail::lift_residue(f1_residue, n + 1, position_sketch(y).f1);
  DecodeResult<BitString> out =
      DecodeResult<BitString>::failure(DecodeStatus::no_placement);
  detail::vt_sweep(y, [&](const MovingBitState& st) {
    if (st.value == target) {
      out = DecodeResult<BitString>::success(st.current);
      return false;
    }
    return st.value < target;
  });
  return out;
}

DecodeResult<BitString> decode_run1(const BitString& y,
                                    std::uint64_t f1r_residue) {
  const std::uint64_t n = y.size() + 1;
  if (f1r_residue >= 2 * n + 2)
    return DecodeResult<BitString>::failure(DecodeStatus::bad_input);
  const detail::YProfile p{y};
  const std::uint64_t target =
      detail::lift_residue(f1r_residue, 2 * n + 2, p.f1r);
  const std::uint64_t raise = target - p.f1r;

  // Run-extending placements cover every raise in 0..runs exactly.
  if (raise <= p.runs) {
    auto g = p.run_gap_lo[raise];
    int b = static_cast<int>(raise % 2);
    return DecodeResult<BitString>::success(y.inserted(g + 1, b));
  }

  // Run-creating placements, scanned right to left: the raise r(g)+1+2(m+1-g)
  // grows strictly as g moves left, so the first hit is the only one.
  for (std::size_t g = p.m + 1; g-- > 0;) {
    int lnb = p.bit_ext(static_cast<long long>(g));
    if (lnb != p.bit_ext(static_cast<long long>(g) + 1)) continue;
    std::uint64_t inc = p.rank[g] + 1 + 2 * (p.m + 1 - g);
    if (inc == raise)
      return DecodeResult<BitString>::success(y.inserted(g + 1, 1 - lnb));
    if (inc > raise) break;
  }
  return DecodeResult<BitString>::failure(DecodeStatus::no_placement);
}

}  // namespace delcode
