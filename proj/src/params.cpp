#include <algorithm>
#include <set>

#include "rankone/error.hpp"
#include "rankone/measure.hpp"
#include "rankone/params.hpp"

namespace rankone {

LevelSpec::LevelSpec(std::size_t cuts, SpacerTuple tuple) : r(cuts), s(std::move(tuple)) {
  if (r < 2) throw Error(ErrorCode::InvalidParams, "cut count must be >= 2, got " + std::to_string(r));
  if (s.cuts() != r) {
    throw Error(ErrorCode::InvalidParams, "level with r = " + std::to_string(r) + " needs " + std::to_string(r - 1) +
                                              " spacers, got " + std::to_string(s.size()));
  }
}

ParamSpec ParamSpec::periodic(std::vector<LevelSpec> prefix, std::vector<LevelSpec> cycle) {
  if (cycle.empty()) throw Error(ErrorCode::InvalidParams, "periodic tail needs a nonempty cycle");
  return ParamSpec{std::move(prefix), std::move(cycle)};
}

ParamSpec ParamSpec::prefix_only(std::vector<LevelSpec> prefix) { return ParamSpec{std::move(prefix), std::nullopt}; }

const LevelSpec& resolve_level(const ParamSpec& params, std::size_t n) {
  if (n < params.prefix.size()) return params.prefix[n];
  if (!params.cycle) {
    throw Error(ErrorCode::BeyondPrefix, "level " + std::to_string(n) + " beyond prefix of length " +
                                             std::to_string(params.prefix.size()) + " with unspecified tail");
  }
  const auto& cycle = *params.cycle;
  return cycle[(n - params.prefix.size()) % cycle.size()];
}

namespace {

template <typename Fn>
void for_each_listed_level(const ParamSpec& params, Fn&& fn) {
  for (const auto& level : params.prefix) fn(level);
  if (params.cycle) {
    for (const auto& level : *params.cycle) fn(level);
  }
}

}  // namespace

std::size_t max_cut(const ParamSpec& params) {
  std::size_t best = 0;
  for_each_listed_level(params, [&](const LevelSpec& l) { best = std::max(best, l.r); });
  return best;
}

Spacer max_spacer(const ParamSpec& params) {
  Spacer best = 0;
  for_each_listed_level(params, [&](const LevelSpec& l) { best = std::max(best, l.s.max()); });
  return best;
}

mpz_class word_length(const ParamSpec& params, std::size_t n) {
  mpz_class length = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const LevelSpec& level = resolve_level(params, k);
    length = length * static_cast<unsigned long>(level.r) + mpz_class(std::to_string(level.s.sum()));
  }
  return length;
}

mpz_class zero_count(const ParamSpec& params, std::size_t n) {
  mpz_class count = 1;
  for (std::size_t k = 0; k < n; ++k) count *= static_cast<unsigned long>(resolve_level(params, k).r);
  return count;
}

std::uint64_t checked_length(const ParamSpec& params, std::size_t n, std::uint64_t budget) {
  const mpz_class length = word_length(params, n);
  if (length > mpz_class(std::to_string(budget))) {
    throw Error(ErrorCode::BudgetExceeded, "|v_" + std::to_string(n) + "| = " + length.get_str() +
                                               " exceeds budget " + std::to_string(budget));
  }
  return std::stoull(length.get_str());
}

Word build_word(const ParamSpec& params, std::size_t n, std::uint64_t budget) {
  checked_length(params, n, budget);
  std::string word = "0";
  for (std::size_t k = 0; k < n; ++k) {
    const LevelSpec& level = resolve_level(params, k);
    std::string next;
    next.reserve(word.size() * level.r + level.s.sum());
    next += word;
    for (Spacer gap : level.s.values()) {
      next.append(gap, '1');
      next += word;
    }
    word = std::move(next);
  }
  return Word{std::move(word), n};
}

LevelSpec combine_levels(const ParamSpec& params, std::size_t first, std::size_t last) {
  if (first > last) throw Error(ErrorCode::LevelOrder, "combine_levels needs first <= last");
  const LevelSpec& base = resolve_level(params, first);
  std::size_t r = base.r;
  SpacerTuple s = base.s;
  for (std::size_t k = first + 1; k <= last; ++k) {
    const LevelSpec& upper = resolve_level(params, k);
    r *= upper.r;
    s = star(upper.s, s);
  }
  return LevelSpec(r, std::move(s));
}

ParamSpec collapse_level(const ParamSpec& params, std::size_t n0) {
  if (n0 + 1 >= params.prefix.size()) {
    if (params.is_periodic()) {
      throw Error(ErrorCode::TailCollapse, "levels " + std::to_string(n0) + "," + std::to_string(n0 + 1) +
                                               " are not both in the prefix; unroll the cycle first");
    }
    throw Error(ErrorCode::BeyondPrefix, "level " + std::to_string(n0 + 1) + " beyond prefix");
  }
  ParamSpec out = params;
  out.prefix[n0] = combine_levels(params, n0, n0 + 1);
  out.prefix.erase(out.prefix.begin() + static_cast<std::ptrdiff_t>(n0) + 1);
  return out;
}

ParamSpec unroll(const ParamSpec& params, std::size_t copies) {
  if (!params.is_periodic()) {
    if (copies == 0) return params;
    throw Error(ErrorCode::UnspecifiedTail, "cannot unroll an unspecified tail");
  }
  ParamSpec out = params;
  for (std::size_t c = 0; c < copies; ++c) {
    out.prefix.insert(out.prefix.end(), params.cycle->begin(), params.cycle->end());
  }
  return out;
}

std::string condition_name(Condition1 c) {
  switch (c) {
    case Condition1::Holds: return "Holds";
    case Condition1::FailsOnTail: return "FailsOnTail";
    case Condition1::UndeterminedPrefixOnly: return "UndeterminedPrefixOnly";
  }
  return "?";
}

std::string condition_name(Condition2 c) {
  return c == Condition2::Holds ? "Holds" : "UndeterminedPrefixOnly";
}

MeasureConditionReport check_measure_conditions(const ParamSpec& params) {
  MeasureConditionReport report;
  std::set<Spacer> seen;
  for_each_listed_level(params, [&](const LevelSpec& l) { seen.insert(l.s.values().begin(), l.s.values().end()); });
  report.distinct_spacer_values = seen.size();
  report.evidence_levels = params.prefix_length() + params.cycle_length();

  if (!params.is_periodic()) {
    report.normalizer = partial_normalizer(params, params.prefix_length());
    report.ones_density = 1 - 1 / report.normalizer;
    report.ones_density.canonicalize();
    report.notes.push_back("tail unspecified; evidence limited to " + std::to_string(params.prefix_length()) +
                           " prefix levels");
    if (seen.size() > 1) report.notes.push_back("prefix already shows distinct spacer values");
    return report;
  }

  // Every tail segment repeats the cycle, so values differ arbitrarily late iff
  // the cycle itself contains two different values.
  std::set<Spacer> tail_values;
  for (const auto& l : *params.cycle) tail_values.insert(l.s.values().begin(), l.s.values().end());
  report.condition1 = tail_values.size() > 1 ? Condition1::Holds : Condition1::FailsOnTail;
  if (tail_values.size() == 1) {
    report.notes.push_back("every tail spacer equals " + std::to_string(*tail_values.begin()));
  }

  report.condition2 = Condition2::Holds;
  report.normalizer = normalizer(params).value;
  report.ones_density = 1 - 1 / report.normalizer;
  report.ones_density.canonicalize();
  report.notes.push_back("density of 1s increases to its limit " + to_string(report.ones_density) + " < 1");
  return report;
}

CanonicalCheck canonical_necessary(const ParamSpec& params, std::size_t up_to) {
  CanonicalCheck result;
  for (std::size_t n = 0; n <= up_to; ++n) {
    const SpacerTuple combined = star(resolve_level(params, n + 1).s, resolve_level(params, n).s);
    ++result.pairs_checked;
    if (is_constant(combined)) {
      result.holds = false;
      result.first_failure = n;
      return result;
    }
  }
  return result;
}

CanonicalCheck canonical_necessary(const ParamSpec& params) {
  const std::size_t levels = params.prefix_length() + params.cycle_length();
  if (params.is_periodic()) return canonical_necessary(params, levels - 1);
  if (levels < 2) return CanonicalCheck{};
  return canonical_necessary(params, levels - 2);
}

}  // namespace rankone
