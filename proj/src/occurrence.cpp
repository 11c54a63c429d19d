#include "rankone/occurrence.hpp"

#include <algorithm>
#include <vector>

#include "rankone/error.hpp"

namespace rankone {

namespace {

void require_order(std::size_t n, std::size_t m) {
  if (n > m) throw Error(ErrorCode::LevelOrder, "inner level " + std::to_string(n) + " > outer level " + std::to_string(m));
}

PropertyCheck failure(std::uint64_t position, std::string detail) {
  return PropertyCheck{false, position, std::move(detail)};
}

}  // namespace

OccurrenceParse expected_offsets(const ParamSpec& params, std::size_t n, std::size_t m, std::uint64_t budget) {
  require_order(n, m);
  checked_length(params, m, budget);
  OccurrenceParse parse{n, m, checked_length(params, n, budget), {0}};
  std::uint64_t block_length = parse.inner_length;
  for (std::size_t k = n; k < m; ++k) {
    const LevelSpec& level = resolve_level(params, k);
    std::vector<std::uint64_t> next;
    next.reserve(parse.offsets.size() * level.r);
    std::uint64_t block_start = 0;
    for (std::size_t j = 0; j < level.r; ++j) {
      if (j > 0) block_start += block_length + level.s.at(j);
      for (std::uint64_t o : parse.offsets) next.push_back(block_start + o);
    }
    block_length = block_length * level.r + level.s.sum();
    parse.offsets = std::move(next);
  }
  return parse;
}

GapSequence gap_sequence(const OccurrenceParse& parse) {
  GapSequence out;
  for (std::size_t j = 0; j + 1 < parse.offsets.size(); ++j) {
    out.gaps.push_back(parse.offsets[j + 1] - parse.offsets[j] - parse.inner_length);
  }
  return out;
}

GapSequence gap_sequence(const ParamSpec& params, std::size_t n, std::size_t m, std::uint64_t budget) {
  return gap_sequence(expected_offsets(params, n, m, budget));
}

ExpectednessReport verify_expectedness_properties(const ParamSpec& params, std::size_t n, std::size_t m,
                                                  std::uint64_t budget) {
  const OccurrenceParse parse = expected_offsets(params, n, m, budget);
  const std::string outer = build_word(params, m, budget).symbols;
  const std::string inner = build_word(params, n, budget).symbols;
  const std::uint64_t len = parse.inner_length;
  ExpectednessReport report;

  // Coverage: count how many occurrences cover each position.
  std::vector<std::uint32_t> cover(outer.size(), 0);
  for (std::uint64_t o : parse.offsets) {
    if (o + len > outer.size()) {
      report.coverage = failure(o, "occurrence runs past the end of v_m");
      break;
    }
    if (outer.compare(o, len, inner) != 0) {
      report.coverage = failure(o, "symbols at offset differ from v_n");
      break;
    }
    for (std::uint64_t p = o; p < o + len; ++p) ++cover[p];
  }
  if (report.coverage.pass) {
    for (std::uint64_t p = 0; p < outer.size(); ++p) {
      if (outer[p] == '0' && cover[p] != 1) {
        report.coverage = failure(p, "0 covered " + std::to_string(cover[p]) + " times");
        break;
      }
      if (cover[p] == 0 && outer[p] != '1') {
        report.coverage = failure(p, "uncovered symbol is not 1");
        break;
      }
    }
  }

  for (std::size_t j = 0; j + 1 < parse.offsets.size(); ++j) {
    if (parse.offsets[j + 1] < parse.offsets[j] + len) {
      report.non_overlap = failure(parse.offsets[j + 1], "occurrences overlap");
      break;
    }
  }

  for (std::size_t k = n + 1; k <= m && report.containment.pass && report.uniform_layout.pass; ++k) {
    const OccurrenceParse outer_parse = expected_offsets(params, k, m, budget);
    const std::vector<std::uint64_t> layout = expected_offsets(params, n, k, budget).offsets;
    const std::uint64_t outer_len = outer_parse.inner_length;

    std::vector<std::vector<std::uint64_t>> relative(outer_parse.offsets.size());
    for (std::uint64_t o : parse.offsets) {
      // Candidates start at or before o; walk back while they can still reach o + len.
      std::size_t holders = 0;
      auto it = std::upper_bound(outer_parse.offsets.begin(), outer_parse.offsets.end(), o);
      while (it != outer_parse.offsets.begin()) {
        --it;
        const std::uint64_t q = *it;
        if (q + outer_len < o + len) break;
        ++holders;
        relative[static_cast<std::size_t>(it - outer_parse.offsets.begin())].push_back(o - q);
      }
      if (holders != 1) {
        report.containment = failure(o, "occurrence of v_" + std::to_string(n) + " lies in " +
                                            std::to_string(holders) + " occurrences of v_" + std::to_string(k));
        break;
      }
    }
    if (!report.containment.pass) break;
    for (std::size_t b = 0; b < relative.size(); ++b) {
      if (relative[b] != layout) {
        report.uniform_layout = failure(outer_parse.offsets[b], "layout of v_" + std::to_string(n) +
                                                                    " differs inside this v_" + std::to_string(k));
        break;
      }
    }
  }
  return report;
}

std::vector<std::size_t> find_spacer_pattern(const ParamSpec& params, std::size_t n, std::size_t m,
                                             const SpacerTuple& pattern, std::uint64_t budget) {
  if (n >= m) throw Error(ErrorCode::LevelOrder, "pattern search needs inner level < outer level");
  const GapSequence gaps = gap_sequence(params, n, m, budget);
  if (pattern.size() >= gaps.gaps.size()) {
    throw Error(ErrorCode::PatternTooLong, "pattern length " + std::to_string(pattern.size()) +
                                               " >= gap count " + std::to_string(gaps.gaps.size()));
  }
  std::vector<std::size_t> hits;
  const auto values = pattern.values();
  for (std::size_t j = 0; j + values.size() <= gaps.gaps.size(); ++j) {
    if (std::equal(values.begin(), values.end(), gaps.gaps.begin() + static_cast<std::ptrdiff_t>(j))) {
      hits.push_back(j);
    }
  }
  return hits;
}

}  // namespace rankone
