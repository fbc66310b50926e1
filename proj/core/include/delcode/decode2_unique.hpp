#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "delcode/bitstring.hpp"
#include "delcode/result.hpp"
#include "delcode/sketch.hpp"

namespace delcode {

// One placement of a deleted 1/0 pair: the 1 at gap g1, the 0's gap forced
// by the position-sum target, together with the two pseudorank readings and
// the exact sketch values of the string the placement realizes.
struct PseudorankEntry {
  std::size_t g1 = 0;
  std::size_t g0 = 0;
  bool zero_on_right = false;  // relative order of the two inserted bits
  std::size_t pos1 = 0;        // 1-based positions in the realized string
  std::size_t pos0 = 0;
  std::uint64_t a1 = 0;  // pseudorank charging the 1 as the run creator
  std::uint64_t a0 = 0;  // pseudorank charging the 0 instead
  std::uint32_t run_delta = 0;
  std::uint64_t f1r = 0;  // exact rank sum of the realized string
  std::uint64_t f2 = 0;   // exact position pair sum of the realized string
};

// Every placement of a deleted 1/0 pair consistent with one position-sum
// value, at most one entry per gap of the 1; gaps admitting no consistent 0
// position are absent.  Entries are ordered by g1 ascending.  The
// monotonicity arguments sweep each creator family separately: entries
// whose 1 opens the new run by g1 descending, entries whose 0 opens it
// by g0 descending.
struct PseudorankProfile {
  BitString y;
  std::uint64_t f1_target = 0;
  std::vector<PseudorankEntry> entries;
};

PseudorankProfile pseudorank_profile(const BitString& y,
                                     std::uint64_t f1_target);

// The string an entry stands for.
BitString profile_candidate(const BitString& y, const PseudorankEntry& e);

// Interval containing both inserted positions of every candidate that
// survived the sketch filters, for the case where more than one did.
struct Localization {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::vector<BitString> candidates;  // deduped, sorted
  std::size_t width() const { return hi - lo + 1; }
};

struct LocalizeOutcome {
  DecodeStatus status = DecodeStatus::no_placement;
  std::optional<BitString> unique;     // set when exactly one survives
  std::optional<Localization> interval;  // set when several survive
};

// Filters profile entries on pseudorank equal to the rank-sum target and on
// the position pair sum.  One survivor is returned directly; several come
// back localized to an interval no wider than twice the block length.  A
// wider interval means the string the bits were deleted from was not
// regular, reported as regularity_violation.
LocalizeOutcome localize(const PseudorankProfile& profile,
                         std::uint64_t f1r_target, std::uint64_t f2_target,
                         const CodeParams& params);

// Picks the unique candidate whose block sketches match the bundle.  Zero
// or several matches break the separation guarantee the blocks provide, so
// both throw internal_error.
BitString disambiguate_blocks(const std::vector<BitString>& candidates,
                              const SketchBundle& bundle);

// Sub-case decoders.  Targets are exact sketch values, already lifted from
// residues to the unique representative at or above y's own value.

// Both deleted bits equal (bit is their common value): position sum and
// pair sum pin the string down.
DecodeResult<BitString> decode_same_bits(const BitString& y,
                                         std::uint64_t f1_target,
                                         std::uint64_t f2_target, int bit);

// One 0 and one 1 deleted, run count changed by 0 or 4: position sum and
// rank sum suffice.
DecodeResult<BitString> decode_04_runs(const BitString& y,
                                       std::uint64_t f1_target,
                                       std::uint64_t f1r_target,
                                       unsigned run_delta);

struct DecodeOptions {
  // Re-derive the answer by scanning every insertion pair and comparing
  // full bundles, then require agreement.  Costs O(n^2) bundle
  // evaluations; meant for tests and debugging.
  bool cross_check = false;
};

// Full two-deletion decoder: dispatches on the deleted-ones count (mod 3)
// and the run delta (mod 5), runs the matching sub-case, and settles any
// residual ambiguity through the block sketches.
DecodeResult<BitString> decode_unique2(const BitString& y,
                                       const SketchBundle& bundle,
                                       const DecodeOptions& options = {});

// Companion decoder for a single lost bit against the same bundle kind,
// used when a codeword section is short by only one.
DecodeResult<BitString> decode_unique2_single(const BitString& y,
                                              const SketchBundle& bundle);

}  // namespace delcode
