#include "rankone/inverse.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "rankone/error.hpp"

namespace rankone {

namespace {

constexpr std::size_t kMaxAlignedWindow = std::size_t{1} << 20;

std::vector<LevelSpec> reversed_levels(const std::vector<LevelSpec>& levels) {
  std::vector<LevelSpec> out;
  out.reserve(levels.size());
  for (const auto& l : levels) out.emplace_back(l.r, reverse(l.s));
  return out;
}

// Least N such that every listed tuple at index >= N is palindromic.
std::size_t palindromic_from(const std::vector<LevelSpec>& levels) {
  std::size_t n = levels.size();
  while (n > 0 && is_palindrome(levels[n - 1].s)) --n;
  return n;
}

}  // namespace

ParamSpec invert_params(const ParamSpec& params) {
  ParamSpec out;
  out.prefix = reversed_levels(params.prefix);
  if (params.cycle) out.cycle = reversed_levels(*params.cycle);
  return out;
}

SufficientResult sufficient_self_inverse(const ParamSpec& params) {
  SufficientResult result;
  const std::size_t from = palindromic_from(params.prefix);
  if (!params.is_periodic()) {
    result.kind = SufficientResult::Kind::Undetermined;
    if (from < params.prefix_length()) result.from_level = from;
    result.note = from == 0 ? "tail unspecified; every listed tuple is palindromic"
                            : "tail unspecified; finite evidence only";
    return result;
  }
  for (std::size_t j = 0; j < params.cycle->size(); ++j) {
    if (!is_palindrome((*params.cycle)[j].s)) {
      result.kind = SufficientResult::Kind::No;
      result.note = "cycle entry " + std::to_string(j) + " is not a palindrome and recurs forever";
      return result;
    }
  }
  result.kind = SufficientResult::Kind::Yes;
  result.from_level = from;
  result.note = "every tuple from level " + std::to_string(from) + " on is a palindrome";
  return result;
}

PremiseReport check_prop_premises(const ParamSpec& a, const ParamSpec& b, std::size_t horizon) {
  PremiseReport report;
  std::size_t window = 0;
  if (a.is_periodic() && b.is_periodic()) {
    const std::size_t period = std::lcm(a.cycle_length(), b.cycle_length());
    const std::size_t start = std::max(a.prefix_length(), b.prefix_length());
    if (period <= kMaxAlignedWindow) {
      window = start + period;
      report.evidence = Evidence::PeriodicCertified;
    }
  }
  if (report.evidence != Evidence::PeriodicCertified) {
    if (horizon == 0) {
      throw Error(ErrorCode::IncompatibleRepresentations,
                  "periods cannot be aligned; pass a positive horizon for a finite check");
    }
    if (!a.resolvable(horizon - 1) || !b.resolvable(horizon - 1)) {
      throw Error(ErrorCode::BeyondPrefix, "horizon " + std::to_string(horizon) + " beyond a prefix");
    }
    window = horizon;
  }
  report.levels_checked = window;
  const std::size_t periodic_start = std::max(a.prefix_length(), b.prefix_length());

  report.condition1 = true;
  report.condition2 = true;
  for (std::size_t n = 0; n < window; ++n) {
    const LevelSpec& la = resolve_level(a, n);
    const LevelSpec& lb = resolve_level(b, n);
    report.spacer_bound = std::max({report.spacer_bound, la.s.max(), lb.s.max()});
    if (la.r != lb.r || la.s.sum() != lb.s.sum()) {
      if (report.condition1) report.condition1_failure = n;
      report.condition1 = false;
      continue;
    }
    if (perp(la.s, lb.s)) {
      report.perp_levels.push_back(n);
      report.cut_bound = std::max(report.cut_bound, la.r);
      if (report.evidence == Evidence::PeriodicCertified && n >= periodic_start) report.certified_infinite = true;
    }
  }
  // Finite horizons cannot establish "infinitely often"; only recurring levels can.
  report.condition3 = report.certified_infinite;
  return report;
}

WitnessCertificate build_witness(const ParamSpec& params, std::uint64_t spot_check_budget) {
  if (!params.is_periodic()) throw Error(ErrorCode::UnspecifiedTail, "witness construction needs a periodic tail");
  if (sufficient_self_inverse(params).kind != SufficientResult::Kind::No) {
    throw Error(ErrorCode::NoRecurringAsymmetry, "no non-palindromic tuple recurs in the cycle");
  }
  const CanonicalCheck canonical = canonical_necessary(params);
  if (!canonical.holds) {
    throw Error(ErrorCode::CanonicalConditionFailed,
                "s_{n+1} * s_n is constant at n = " + std::to_string(*canonical.first_failure));
  }

  const std::size_t p = params.prefix_length();
  const std::size_t c = params.cycle_length();

  // Greedy segmentation: from level k, pick the least m > k with s_m not a
  // palindrome; the telescoped sequence gets levels u_k -> u_m and u_m -> u_{m+3}.
  struct Segment {
    std::size_t k, m;
  };
  std::vector<Segment> segments;
  std::map<std::size_t, std::size_t> first_segment_at_phase;
  std::size_t k = 0;
  std::size_t cycle_start = 0;
  while (true) {
    if (k >= p) {
      const std::size_t phase = (k - p) % c;
      auto [it, inserted] = first_segment_at_phase.emplace(phase, segments.size());
      if (!inserted) {
        cycle_start = it->second;
        break;
      }
    }
    std::size_t m = k + 1;
    while (is_palindrome(resolve_level(params, m).s)) ++m;
    segments.push_back({k, m});
    k = m + 3;
  }

  WitnessCertificate cert;
  cert.params = params;
  cert.max_cut = max_cut(params);
  cert.max_spacer = max_spacer(params);
  const std::size_t r_bound = cert.max_cut * cert.max_cut * cert.max_cut;

  std::vector<LevelSpec> tele_prefix;
  std::vector<LevelSpec> tele_cycle;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto [seg_k, seg_m] = segments[i];
    auto& target = i < cycle_start ? tele_prefix : tele_cycle;
    target.push_back(combine_levels(params, seg_k, seg_m - 1));
    target.push_back(combine_levels(params, seg_m, seg_m + 2));
    cert.level_map.push_back(seg_k);
    cert.level_map.push_back(seg_m);

    WitnessEntry entry;
    entry.telescoped_level = 2 * i + 1;
    entry.base_level = seg_m;
    entry.combined_r = target.back().r;
    entry.combined_s = target.back().s;
    entry.perp_verified = perp(entry.combined_s, reverse(entry.combined_s));
    entry.r_bound = r_bound;
    cert.entries.push_back(std::move(entry));
  }
  cert.level_map.push_back(k);
  cert.telescoped = ParamSpec::periodic(std::move(tele_prefix), std::move(tele_cycle));

  for (std::size_t j = 0; j < cert.level_map.size(); ++j) {
    if (word_length(params, cert.level_map[j]) > spot_check_budget) break;
    const Word original = build_word(params, cert.level_map[j], spot_check_budget);
    const Word telescoped = build_word(cert.telescoped, j, spot_check_budget);
    if (original.symbols != telescoped.symbols) {
      throw std::logic_error("telescoped word " + std::to_string(j) + " differs from original");
    }
    ++cert.words_spot_checked;
  }

  cert.premises = check_prop_premises(cert.telescoped, invert_params(cert.telescoped));
  return cert;
}

CertificateCheck verify_certificate(const WitnessCertificate& cert) {
  CertificateCheck check;
  auto fail = [&](std::string why) {
    check.ok = false;
    check.failures.push_back(std::move(why));
  };
  const ParamSpec& params = cert.params;
  const ParamSpec& tele = cert.telescoped;
  if (!params.is_periodic() || !tele.is_periodic()) {
    fail("params and telescoped params must both have periodic tails");
    return check;
  }
  if (cert.max_cut != max_cut(params)) fail("max_cut does not match params");
  if (cert.max_spacer != max_spacer(params)) fail("max_spacer does not match params");
  const std::size_t r_bound = max_cut(params) * max_cut(params) * max_cut(params);

  const auto& map = cert.level_map;
  const std::size_t listed = tele.prefix_length() + tele.cycle_length();
  if (map.size() != listed + 1 || map.front() != 0) {
    fail("level_map must start at 0 and cover the telescoped prefix plus one cycle");
    return check;
  }
  if (!std::is_sorted(map.begin(), map.end(), std::less_equal<>{})) {
    fail("level_map must be strictly increasing");
    return check;
  }
  const std::size_t cycle_begin = map[tele.prefix_length()];
  const std::size_t shift = map.back() - cycle_begin;
  if (cycle_begin < params.prefix_length() || shift == 0 || shift % params.cycle_length() != 0) {
    fail("telescoped cycle does not align with the original cycle");
  }

  // Each telescoped level must be the star-combination of its original levels.
  for (std::size_t j = 0; j < listed; ++j) {
    std::size_t r = resolve_level(params, map[j]).r;
    SpacerTuple s = resolve_level(params, map[j]).s;
    for (std::size_t lvl = map[j] + 1; lvl < map[j + 1]; ++lvl) {
      r *= resolve_level(params, lvl).r;
      s = star(resolve_level(params, lvl).s, s);
    }
    const LevelSpec& claimed = resolve_level(tele, j);
    if (claimed.r != r || claimed.s != s) fail("telescoped level " + std::to_string(j) + " is not the combination");
  }

  std::size_t expected_entries = 0;
  for (std::size_t j = 1; j < listed; j += 2) ++expected_entries;
  if (cert.entries.size() != expected_entries) fail("entry count does not match odd telescoped levels");
  for (const auto& e : cert.entries) {
    const std::string tag = "entry at telescoped level " + std::to_string(e.telescoped_level);
    const std::size_t j = e.telescoped_level;
    if (j % 2 == 0 || j >= listed || map[j] != e.base_level || map[j + 1] != e.base_level + 3) {
      fail(tag + ": base level does not span three original levels");
      continue;
    }
    const LevelSpec& s0 = resolve_level(params, e.base_level);
    const LevelSpec& s1 = resolve_level(params, e.base_level + 1);
    const LevelSpec& s2 = resolve_level(params, e.base_level + 2);
    if (is_palindrome(s0.s)) fail(tag + ": base tuple is a palindrome");
    if (e.combined_s != star(s2.s, star(s1.s, s0.s))) fail(tag + ": combined tuple mismatch");
    if (e.combined_r != s0.r * s1.r * s2.r) fail(tag + ": combined cut count mismatch");
    const bool perp_now = perp(e.combined_s, reverse(e.combined_s));
    if (!perp_now || !e.perp_verified) fail(tag + ": combined tuple is compatible with its reverse");
    if (e.r_bound != r_bound || e.combined_r > r_bound) fail(tag + ": cut bound violated");
  }

  const PremiseReport premises = check_prop_premises(tele, invert_params(tele));
  if (!(premises == cert.premises)) fail("premise report does not match recomputation");
  if (!premises.all_hold()) fail("premises do not all hold for the telescoped pair");
  return check;
}

InverseDecision decide_self_inverse(const ParamSpec& params) {
  InverseDecision decision;
  if (!params.is_periodic()) {
    decision.reason = "tail unspecified; eventual behaviour unknown";
    return decision;
  }
  decision.hypotheses.bounded = true;
  decision.hypotheses.max_cut = max_cut(params);
  decision.hypotheses.max_spacer = max_spacer(params);
  const CanonicalCheck canonical = canonical_necessary(params);
  decision.hypotheses.canonical_necessary = canonical.holds;
  decision.hypotheses.canonical_pairs_checked = canonical.pairs_checked;
  if (!canonical.holds) {
    throw Error(ErrorCode::CanonicalConditionFailed,
                "s_{n+1} * s_n is constant at n = " + std::to_string(*canonical.first_failure));
  }

  const SufficientResult sufficient = sufficient_self_inverse(params);
  if (sufficient.kind == SufficientResult::Kind::Yes) {
    decision.kind = InverseDecision::Kind::IsomorphicToInverse;
    decision.from_level = *sufficient.from_level;
    decision.reason = sufficient.note;
    return decision;
  }
  decision.kind = InverseDecision::Kind::NotIsomorphicToInverse;
  decision.certificate = build_witness(params);
  decision.reason = sufficient.note;
  return decision;
}

std::string kind_name(InverseDecision::Kind kind) {
  switch (kind) {
    case InverseDecision::Kind::IsomorphicToInverse: return "IsomorphicToInverse";
    case InverseDecision::Kind::NotIsomorphicToInverse: return "NotIsomorphicToInverse";
    case InverseDecision::Kind::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string kind_name(SufficientResult::Kind kind) {
  switch (kind) {
    case SufficientResult::Kind::Yes: return "Yes";
    case SufficientResult::Kind::No: return "No";
    case SufficientResult::Kind::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string evidence_name(Evidence e) {
  return e == Evidence::PeriodicCertified ? "PeriodicCertified" : "FiniteHorizon";
}

}  // namespace rankone
