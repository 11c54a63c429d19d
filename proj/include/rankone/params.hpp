#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankone/spacer.hpp"

namespace rankone {

// Cut count r and spacer tuple s for one level of the construction.
struct LevelSpec {
  std::size_t r;
  SpacerTuple s;

  explicit LevelSpec(SpacerTuple tuple) : r(tuple.cuts()), s(std::move(tuple)) {}
  // Throws InvalidParams unless r >= 2 and |s| = r - 1.
  LevelSpec(std::size_t cuts, SpacerTuple tuple);

  friend bool operator==(const LevelSpec&, const LevelSpec&) = default;
};

// Explicit prefix followed by either a periodic cycle or nothing known.
struct ParamSpec {
  std::vector<LevelSpec> prefix;
  std::optional<std::vector<LevelSpec>> cycle;  // nullopt: unspecified tail

  static ParamSpec periodic(std::vector<LevelSpec> prefix, std::vector<LevelSpec> cycle);
  static ParamSpec prefix_only(std::vector<LevelSpec> prefix);

  bool is_periodic() const noexcept { return cycle.has_value(); }
  std::size_t prefix_length() const noexcept { return prefix.size(); }
  std::size_t cycle_length() const noexcept { return cycle ? cycle->size() : 0; }
  bool resolvable(std::size_t n) const noexcept { return is_periodic() || n < prefix.size(); }

  friend bool operator==(const ParamSpec&, const ParamSpec&) = default;
};

inline constexpr std::uint64_t kDefaultWordBudget = std::uint64_t{1} << 26;

struct Word {
  std::string symbols;  // '0' / '1'
  std::size_t level = 0;
};

const LevelSpec& resolve_level(const ParamSpec& params, std::size_t n);

// Greatest cut count and spacer value over prefix and cycle.
std::size_t max_cut(const ParamSpec& params);
Spacer max_spacer(const ParamSpec& params);

Word build_word(const ParamSpec& params, std::size_t n, std::uint64_t budget = kDefaultWordBudget);

// |v_n| by L_{n+1} = r_n L_n + sum(s_n), L_0 = 1.
mpz_class word_length(const ParamSpec& params, std::size_t n);
// Number of zeros in v_n, the product of r_k for k < n.
mpz_class zero_count(const ParamSpec& params, std::size_t n);

// Throws BudgetExceeded when |v_n| exceeds the budget; otherwise returns |v_n|.
std::uint64_t checked_length(const ParamSpec& params, std::size_t n, std::uint64_t budget);

// Merges prefix levels n0 and n0+1 into one level (r_{n0+1} r_{n0}, s_{n0+1} * s_{n0}).
ParamSpec collapse_level(const ParamSpec& params, std::size_t n0);

// Appends `copies` full cycles to the prefix; the cycle itself is unchanged.
ParamSpec unroll(const ParamSpec& params, std::size_t copies);

// Single level combining original levels first..last (inclusive).
LevelSpec combine_levels(const ParamSpec& params, std::size_t first, std::size_t last);

enum class Condition1 { Holds, FailsOnTail, UndeterminedPrefixOnly };
enum class Condition2 { Holds, UndeterminedPrefixOnly };

struct MeasureConditionReport {
  Condition1 condition1 = Condition1::UndeterminedPrefixOnly;
  Condition2 condition2 = Condition2::UndeterminedPrefixOnly;
  // Levels examined: the prefix, plus one cycle when the tail is periodic.
  std::size_t evidence_levels = 0;
  // Distinct spacer values seen in the examined levels.
  std::size_t distinct_spacer_values = 0;
  // Exact density of 1s. For periodic tails this is the limit (and supremum),
  // otherwise the value at the end of the prefix.
  mpq_class ones_density;
  // Normalizer Z (periodic) or the prefix partial normalizer.
  mpq_class normalizer;
  std::vector<std::string> notes;
};

MeasureConditionReport check_measure_conditions(const ParamSpec& params);

struct CanonicalCheck {
  bool holds = true;
  std::optional<std::size_t> first_failure;
  // Number of levels n tested (n = 0 .. pairs_checked - 1).
  std::size_t pairs_checked = 0;
};

// True iff s_{n+1} * s_n is non-constant for every n <= up_to.
CanonicalCheck canonical_necessary(const ParamSpec& params, std::size_t up_to);
// Checks prefix plus one cycle, which covers every level by periodicity.
// Unspecified tails are checked as far as the prefix allows.
CanonicalCheck canonical_necessary(const ParamSpec& params);

std::string condition_name(Condition1 c);
std::string condition_name(Condition2 c);

}  // namespace rankone
