#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "rankone/spacer.hpp"

namespace rankone {

struct SweepResult {
  std::uint64_t checked = 0;
  // (first, second) pairs that failed, in enumeration order.
  std::vector<std::pair<SpacerTuple, SpacerTuple>> counterexamples;
};

// lemma22_check over every non-palindromic s1 and non-constant s2 with cut
// counts in [2, r_max] and entries <= s_max. Work is split over `threads`
// workers; the result does not depend on the thread count.
SweepResult lemma_sweep(std::size_t r_max, Spacer s_max, unsigned threads = 1);

// perp(s, s') == perp(s', s) for every equal-length pair in the same range.
SweepResult perp_symmetry_sweep(std::size_t r_max, Spacer s_max, unsigned threads = 1);

}  // namespace rankone
