#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankone/params.hpp"

namespace rankone {

// Start positions of the expected occurrences of v_inner inside v_outer.
struct OccurrenceParse {
  std::size_t inner_level = 0;
  std::size_t outer_level = 0;
  std::uint64_t inner_length = 0;
  std::vector<std::uint64_t> offsets;
};

struct GapSequence {
  std::vector<std::uint64_t> gaps;
};

// Built from the construction recursion, never by searching the symbols.
OccurrenceParse expected_offsets(const ParamSpec& params, std::size_t n, std::size_t m,
                                 std::uint64_t budget = kDefaultWordBudget);

GapSequence gap_sequence(const ParamSpec& params, std::size_t n, std::size_t m,
                         std::uint64_t budget = kDefaultWordBudget);
GapSequence gap_sequence(const OccurrenceParse& parse);

struct PropertyCheck {
  bool pass = true;
  std::optional<std::uint64_t> counterexample;  // position in v_m
  std::string detail;
};

// Expected-occurrence properties re-checked against the raw symbols of v_m.
struct ExpectednessReport {
  PropertyCheck coverage;        // every 0 in exactly one occurrence; symbols match; gaps are all 1
  PropertyCheck containment;     // each v_n occurrence inside exactly one v_k occurrence, n < k <= m
  PropertyCheck non_overlap;
  PropertyCheck uniform_layout;  // same relative v_n layout inside every v_k occurrence

  bool all_pass() const noexcept {
    return coverage.pass && containment.pass && non_overlap.pass && uniform_layout.pass;
  }
};

ExpectednessReport verify_expectedness_properties(const ParamSpec& params, std::size_t n, std::size_t m,
                                                  std::uint64_t budget = kDefaultWordBudget);

// Indices j at which gaps[j .. j+|pattern|-1] equals the pattern, i.e. |pattern|+1
// consecutive expected occurrences of v_n separated exactly by the pattern.
std::vector<std::size_t> find_spacer_pattern(const ParamSpec& params, std::size_t n, std::size_t m,
                                             const SpacerTuple& pattern,
                                             std::uint64_t budget = kDefaultWordBudget);

}  // namespace rankone
