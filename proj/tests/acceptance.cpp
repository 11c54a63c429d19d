// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "rankone/cli.hpp"
#include "rankone/error.hpp"
#include "rankone/inverse.hpp"
#include "rankone/json_io.hpp"
#include "rankone/measure.hpp"
#include "rankone/occurrence.hpp"
#include "rankone/sweep.hpp"

using namespace rankone;

namespace {

struct Criterion {
  std::string name;
  std::function<std::string()> run;  // empty string on success, else the first failure
};

std::string fail_if(bool bad, const std::string& what) { return bad ? what : std::string(); }

constexpr std::uint64_t kWordCap = 100000;

std::string paper_examples() {
  using T = SpacerTuple;
  if (star(T{5, 6}, T{0, 1, 0}) != T{0, 1, 0, 5, 0, 1, 0, 6, 0, 1, 0}) return "star example";
  if (!compatibility(T{0, 1, 0}, T{0, 0, 1}).compatible()) return "(0,1,0) vs (0,0,1) should be compatible";
  if (compatibility(T{0, 1, 0}, T{0, 1, 2}).compatible()) return "(0,1,0) vs (0,1,2) should be incompatible";
  const ParamSpec chacon = oracle::chacon2(16);
  if (build_word(chacon, 1).symbols != "00") return "Chacon2 v_1";
  if (build_word(chacon, 2).symbols != "00100") return "Chacon2 v_2";
  for (std::size_t levels = 1; levels <= 16; ++levels) {
    const SufficientResult r = sufficient_self_inverse(oracle::chacon2(levels));
    if (r.kind == SufficientResult::Kind::No || r.from_level != 0u) {
      return "Chacon2 prefix of " + std::to_string(levels) + " levels not palindromic from level 0";
    }
  }
  return {};
}

std::string lemma_sweep_criterion() {
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  const SweepResult r = lemma_sweep(4, 3, threads);
  // 60 non-palindromic s1 times 72 non-constant s2.
  if (r.checked != 60u * 72u) return "unexpected pair count " + std::to_string(r.checked);
  if (!r.counterexamples.empty()) {
    return "counterexample s1=(" + r.counterexamples[0].first.to_string() + ") s2=(" +
           r.counterexamples[0].second.to_string() + ")";
  }
  std::printf("      lemma pairs checked: %llu\n", static_cast<unsigned long long>(r.checked));
  return {};
}

std::string algebraic_laws() {
  std::mt19937_64 rng(20261016);
  auto tuple = [&] { return SpacerTuple(oracle::random_tuple(rng, 5, 5)); };
  for (int i = 0; i < 1000; ++i) {
    const SpacerTuple a = tuple(), b = tuple(), c = tuple();
    if (star(a, star(b, c)) != star(star(a, b), c)) return "associativity";
  }
  for (int i = 0; i < 1000; ++i) {
    const SpacerTuple a = tuple(), b = tuple();
    if (reverse(star(a, b)) != star(reverse(a), reverse(b))) return "reversal homomorphism";
  }
  for (int i = 0; i < 1000; ++i) {
    const SpacerTuple a = tuple();
    if (reverse(reverse(a)) != a) return "involution";
  }
  for (int i = 0; i < 1000; ++i) {
    const SpacerTuple a = tuple();
    const SpacerTuple b(oracle::random_tuple_of_length(rng, a.size(), 5));
    if (perp(a, b) != perp(b, a)) return "perp symmetry on (" + a.to_string() + "),(" + b.to_string() + ")";
  }
  for (int i = 0; i < 1000; ++i) {
    const SpacerTuple a = tuple();
    const CompatibilityResult r = compatibility(a, a);
    if (!r.compatible() || r.offset != 0) return "reflexive compatibility";
  }
  return {};
}

std::string inversion_duality() {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    const ParamSpec p = oracle::random_params(rng);
    const ParamSpec q = invert_params(p);
    for (std::size_t n = 0; word_length(p, n) <= kWordCap; ++n) {
      std::string w = build_word(p, n, kWordCap).symbols;
      std::reverse(w.begin(), w.end());
      if (build_word(q, n, kWordCap).symbols != w) return "trial " + std::to_string(trial) + " level " + std::to_string(n);
    }
  }
  return {};
}

std::string parser_invariants() {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 20; ++trial) {
    const ParamSpec p = oracle::random_params(rng);
    for (std::size_t m = 1; word_length(p, m) <= kWordCap; ++m) {
      const std::string outer = build_word(p, m, kWordCap).symbols;
      for (std::size_t n = 0; n < m; ++n) {
        const std::string tag = "trial " + std::to_string(trial) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
        const ExpectednessReport r = verify_expectedness_properties(p, n, m, kWordCap);
        if (!r.all_pass()) return tag + ": expectedness property failed";
        const OccurrenceParse parse = expected_offsets(p, n, m, kWordCap);
        mpz_class product = 1;
        for (std::size_t k = n; k < m; ++k) product *= static_cast<unsigned long>(resolve_level(p, k).r);
        if (mpz_class(static_cast<unsigned long>(parse.offsets.size())) != product) return tag + ": count";
        const std::string inner = build_word(p, n, kWordCap).symbols;
        for (std::size_t j = 0; j < parse.offsets.size(); ++j) {
          const std::uint64_t o = parse.offsets[j];
          if (outer.compare(o, inner.size(), inner) != 0) return tag + ": symbols at offset";
          const std::uint64_t next = j + 1 < parse.offsets.size() ? parse.offsets[j + 1] : outer.size();
          for (std::uint64_t q = o + inner.size(); q < next; ++q) {
            if (outer[q] != '1') return tag + ": gap symbol not 1";
          }
        }
      }
    }
  }
  return {};
}

std::string blocking_soundness() {
  std::size_t pairs = 0, blocked = 0;
  for (std::size_t r : {3u, 4u}) {
    const auto tuples = enumerate_tuples(r, 2);
    for (const auto& s_prime : tuples) {
      const ParamSpec y = oracle::constant_params(s_prime);
      for (const auto& s : tuples) {
        const bool compatible = compatibility(s, s_prime).compatible();
        for (std::size_t n : {0u, 1u}) {
          ++pairs;
          const bool found = !find_spacer_pattern(y, n, n + 3, s, kWordCap).empty();
          if (found && !compatible) return "(" + s.to_string() + ") found in gaps of (" + s_prime.to_string() + ")";
          if (!compatible) ++blocked;
        }
      }
    }
  }
  std::printf("      pattern searches: %zu, of which perp (must be empty): %zu\n", pairs, blocked);
  return {};
}

std::string measure_exactness() {
  const ParamSpec ones = oracle::constant_params(SpacerTuple{1});
  const NormalizerResult z = normalizer(ones);
  if (!z.exact() || z.value != 2) return "normalizer of all-(2,(1)) is " + to_string(z.value);
  if (cylinder_measure(ones, 2) != mpq_class(1, 8)) return "cylinder_measure(2)";
  for (std::size_t n = 0; n <= 30; ++n) {
    const mpz_class pow = mpz_class(1) << (n + 1);
    if (tower_mass(ones, n) != make_rational(pow - 1, pow)) return "tower_mass(" + std::to_string(n) + ")";
  }
  const SymbolMeasures sm = symbol_measures(ones);
  if (sm.zero != mpq_class(1, 2) || sm.one != mpq_class(1, 2)) return "symbol measures";
  const Word v20 = build_word(ones, 20);
  mpq_class freq(static_cast<unsigned long>(std::count(v20.symbols.begin(), v20.symbols.end(), '0')),
                 static_cast<unsigned long>(v20.symbols.size()));
  freq.canonicalize();
  mpq_class diff = freq - mpq_class(1, 2);
  if (diff < 0) diff = -diff;
  if (!(diff < make_rational(1, mpz_class(1) << 20))) return "0-frequency in v_20 off by " + to_string(diff);

  const ParamSpec tri = oracle::constant_params(SpacerTuple{0, 1});
  const NormalizerResult zt = normalizer(tri);
  if (!zt.exact() || zt.value != mpq_class(3, 2)) return "normalizer of (3,(0,1)) is " + to_string(zt.value);
  // Tail beyond level 20 is at most S (r-1) sum_{k>=20} 3^-(k+1) = 3^-20.
  mpz_class three20;
  mpz_ui_pow_ui(three20.get_mpz_t(), 3, 20);
  const mpq_class gap = zt.value - partial_normalizer(tri, 20);
  if (gap < 0 || gap > make_rational(1, three20)) return "partial normalizer at depth 20 outside the tail bound";
  return {};
}

std::string decision_end_to_end() {
  auto run = [](std::vector<std::string> args, std::string_view input) {
    args.insert(args.begin(), "r1");
    return cli::run(args, input);
  };
  const std::string tri = R"({"prefix":[],"tail":{"type":"periodic","cycle":[{"r":3,"s":[0,1]}]}})";
  const auto decided = run({"decide", "--params", "-", "--json"}, tri);
  if (decided.exit_code != 0) return "decide failed: " + decided.err;
  const Json result = Json::parse(decided.out)["result"];
  if (result["verdict"] != "NotIsomorphicToInverse") return "verdict " + result["verdict"].dump();
  const WitnessCertificate cert = certificate_from_json(result["certificate"]);
  if (cert.entries.empty()) return "empty certificate";
  for (const auto& e : cert.entries) {
    if (e.combined_r != 27 || e.combined_s.size() != 26 || e.combined_r > 27) return "combined level shape";
    if (!perp(e.combined_s, reverse(e.combined_s)) || !e.perp_verified) return "combined tuple not perp its reverse";
  }
  if (!verify_certificate(cert).ok) return "library verification failed";
  const auto verified = run({"verify-cert", "--cert", "-", "--json"}, decided.out);
  if (verified.exit_code != 0) return "verify-cert failed: " + verified.err;
  const Json v = Json::parse(verified.out)["result"];
  if (!v["verified"].get<bool>() || !v["byte_identical"].get<bool>()) return "verify-cert round trip not identical";
  const auto witness = run({"witness", "--params", "-"}, tri);
  if (run({"verify-cert", "--cert", "-"}, witness.out).exit_code != 0) return "witness certificate rejected";
  if (dump_certificate(certificate_from_json(Json::parse(witness.out))) != witness.out) return "witness re-dump differs";

  const InverseDecision pal = decide_self_inverse(ParamSpec::periodic(
      {}, {LevelSpec(SpacerTuple{2}), LevelSpec(SpacerTuple{0, 1, 0})}));
  if (pal.kind != InverseDecision::Kind::IsomorphicToInverse || pal.from_level != 0) return "palindromic cycle verdict";

  try {
    decide_self_inverse(oracle::constant_params(SpacerTuple{1}));
    return "all-(2,(1)) was not refused";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CanonicalConditionFailed) return std::string("wrong refusal ") + std::string(e.name());
  }
  const auto refused = run({"decide", "--params", "-"},
                           R"({"prefix":[],"tail":{"type":"periodic","cycle":[{"r":2,"s":[1]}]}})");
  if (refused.exit_code != 1 || refused.err.find("CanonicalConditionFailed") == std::string::npos) {
    return "CLI refusal";
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 worked examples bit-exact", paper_examples},
      {"2 exhaustive Lemma 2.2 sweep (r<=4, entries<=3)", lemma_sweep_criterion},
      {"3 algebraic laws, 1000 instances each", algebraic_laws},
      {"4 inversion/word duality, 20 params, |v_n|<=1e5", inversion_duality},
      {"5 parser invariants, 20 params, |v_m|<=1e5", parser_invariants},
      {"6 blocking soundness (r in {3,4}, entries<=2, m=n+3)", blocking_soundness},
      {"7 measure exactness", measure_exactness},
      {"8 decision end-to-end with certificate round trip", decision_end_to_end},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = c.run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty()) {
      std::printf("PASS  %-55s %9.1f ms\n", c.name.c_str(), ms);
    } else {
      ++failures;
      std::printf("FAIL  %-55s %9.1f ms  %s\n", c.name.c_str(), ms, failure.c_str());
    }
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
