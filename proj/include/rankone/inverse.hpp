#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rankone/params.hpp"

namespace rankone {

// Same cut counts, every spacer tuple reversed. Presents the inverse system.
ParamSpec invert_params(const ParamSpec& params);

struct SufficientResult {
  enum class Kind { Yes, No, Undetermined };
  Kind kind = Kind::Undetermined;
  // Yes: least N with s_n palindromic for all n >= N.
  // Undetermined: least N from which every listed tuple is palindromic, if any.
  std::optional<std::size_t> from_level;
  std::string note;
};

SufficientResult sufficient_self_inverse(const ParamSpec& params);

enum class Evidence { PeriodicCertified, FiniteHorizon };

// The three hypotheses of the non-isomorphism criterion for a pair of systems.
struct PremiseReport {
  Evidence evidence = Evidence::FiniteHorizon;
  std::size_t levels_checked = 0;

  bool condition1 = false;  // equal r_n and equal spacer sums at every level
  std::optional<std::size_t> condition1_failure;

  bool condition2 = false;  // spacers bounded
  Spacer spacer_bound = 0;  // least S bounding both

  bool condition3 = false;  // r_n <= R and s_n perp s'_n infinitely often
  std::size_t cut_bound = 0;
  std::vector<std::size_t> perp_levels;  // within the checked window
  bool certified_infinite = false;

  bool all_hold() const noexcept { return condition1 && condition2 && condition3; }
  friend bool operator==(const PremiseReport&, const PremiseReport&) = default;
};

// Both tails periodic: the check covers max(P_A, P_B) + lcm(c_A, c_B) levels,
// which certifies every level. Otherwise levels 0..horizon-1 are checked.
PremiseReport check_prop_premises(const ParamSpec& a, const ParamSpec& b, std::size_t horizon = 0);

struct WitnessEntry {
  std::size_t telescoped_level = 0;  // odd level of the telescoped sequence
  std::size_t base_level = 0;        // original level m with non-palindromic s_m
  std::size_t combined_r = 0;
  SpacerTuple combined_s{0};         // s_{m+2} * s_{m+1} * s_m
  bool perp_verified = false;        // combined_s perp reverse(combined_s)
  std::size_t r_bound = 0;           // (max r)^3

  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

struct WitnessCertificate {
  ParamSpec params;
  ParamSpec telescoped;
  // level_map[j] is the original level whose word equals telescoped v_j; it
  // covers the telescoped prefix plus one cycle, plus one closing entry.
  std::vector<std::size_t> level_map;
  std::size_t max_cut = 0;
  Spacer max_spacer = 0;
  std::vector<WitnessEntry> entries;
  PremiseReport premises;  // telescoped vs. its inversion
  std::size_t words_spot_checked = 0;

  friend bool operator==(const WitnessCertificate&, const WitnessCertificate&) = default;
};

// Telescopes a periodic parameter sequence so that every odd level merges three
// original levels starting at a non-palindromic one. Throws UnspecifiedTail,
// NoRecurringAsymmetry, CanonicalConditionFailed.
WitnessCertificate build_witness(const ParamSpec& params, std::uint64_t spot_check_budget = 1u << 16);

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

// Re-derives every claim in the certificate from its params using the spacer
// algebra and the word engine alone.
CertificateCheck verify_certificate(const WitnessCertificate& cert);

struct HypothesisChecks {
  bool bounded = false;
  std::size_t max_cut = 0;
  Spacer max_spacer = 0;
  bool canonical_necessary = false;
  std::size_t canonical_pairs_checked = 0;
};

struct InverseDecision {
  enum class Kind { IsomorphicToInverse, NotIsomorphicToInverse, Undetermined };
  Kind kind = Kind::Undetermined;
  std::size_t from_level = 0;  // N for IsomorphicToInverse
  std::optional<WitnessCertificate> certificate;
  std::string reason;
  HypothesisChecks hypotheses;
};

// Throws CanonicalConditionFailed when s_{n+1} * s_n is constant for some n.
InverseDecision decide_self_inverse(const ParamSpec& params);

std::string kind_name(InverseDecision::Kind kind);
std::string kind_name(SufficientResult::Kind kind);
std::string evidence_name(Evidence e);

}  // namespace rankone
