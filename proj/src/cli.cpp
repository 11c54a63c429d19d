#include "rankone/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "rankone/error.hpp"
#include "rankone/inverse.hpp"
#include "rankone/json_io.hpp"
#include "rankone/measure.hpp"
#include "rankone/occurrence.hpp"
#include "rankone/sweep.hpp"

namespace rankone::cli {

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// FNV-1a, 64 bit.
class Digest {
 public:
  void update(std::string_view bytes) {
    for (unsigned char c : bytes) {
      state_ ^= c;
      state_ *= 0x100000001b3ULL;
    }
    state_ ^= 0xff;  // field separator
    state_ *= 0x100000001b3ULL;
  }
  std::string hex() const { return hex64(state_); }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

struct Globals {
  bool json = false;
  std::uint64_t budget = kDefaultWordBudget;
  std::size_t depth = 3;
  std::size_t horizon = 0;
};

class Context {
 public:
  Context(const std::vector<std::string>& argv, std::string_view stdin_data) : stdin_(stdin_data) {
    for (std::size_t i = 1; i < argv.size(); ++i) digest_.update(argv[i]);
  }

  std::string read(const std::string& path) {
    std::string text;
    if (path == "-") {
      text = std::string(stdin_);
    } else {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw Error(ErrorCode::InvalidParams, "cannot read '" + path + "'");
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    digest_.update(text);
    return text;
  }

  ParamSpec params(const std::string& path) { return parse_params(read(path)); }

  std::string digest() const { return digest_.hex(); }

 private:
  std::string_view stdin_;
  Digest digest_;
};

// A command produces a JSON payload and its plain-text rendering.
struct Report {
  Json payload;
  std::string text;
};

std::string bool_word(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

Json compat_json(const CompatibilityResult& c) {
  Json out{{"verdict", c.compatible() ? "Compatible" : "Incompatible"}};
  if (c.compatible()) {
    out["offset"] = c.offset;
    out["middle"] = c.forced_middle ? Json(*c.forced_middle) : Json("free");
  }
  out["perp"] = !c.compatible();
  return out;
}

Json property_json(const PropertyCheck& p) {
  Json out{{"pass", p.pass}};
  if (!p.pass) {
    out["position"] = *p.counterexample;
    out["detail"] = p.detail;
  }
  return out;
}

Json sweep_json(const SweepResult& r) {
  Json ces = Json::array();
  for (const auto& [a, b] : r.counterexamples) ces.push_back(Json::array({tuple_to_json(a), tuple_to_json(b)}));
  return Json{{"checked", r.checked}, {"counterexamples", ces}};
}

std::string measure_text(const Json& j) {
  std::string out;
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() && value.contains("num")) {
      out += key + " = " + value["num"].get<std::string>() + "/" + value["den"].get<std::string>() + "\n";
    } else if (value.is_object()) {
      out += key + ": " + value.dump() + "\n";
    } else {
      out += key + " = " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
  }
  return out;
}

Json extract_certificate(const Json& doc) {
  if (doc.contains("result")) return extract_certificate(doc["result"]);
  if (doc.contains("certificate")) return doc["certificate"];
  return doc;
}

}  // namespace

Outcome run(const std::vector<std::string>& argv, std::string_view stdin_data) {
  Outcome outcome;
  Globals g;
  Context ctx(argv, stdin_data);

  CLI::App app{"Rank-one symbolic systems: spacer algebra, words, measures and inverse decisions", "r1"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "Emit a JSON report on stdout");
  app.add_option("--budget", g.budget, "Maximum materialized word length")->check(CLI::PositiveNumber);
  app.add_option("--depth", g.depth, "Levels between inner and outer word for parse");
  app.add_option("--horizon", g.horizon, "Finite horizon for premise checks");
  app.set_version_flag("--version", std::string(kVersion));

  std::string s1, s2, s, s_prime, params_path, other_path, cert_path, pattern;
  std::size_t level = 0, inner = 0, copies = 0;
  std::optional<std::size_t> outer, up_to, measure_level;
  std::size_t r_max = 4;
  Spacer s_max = 3;
  unsigned threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  bool verify = false;

  std::function<Report()> action;

  auto* star_cmd = app.add_subcommand("star", "Combine two consecutive spacer tuples");
  star_cmd->add_option("--s2", s2, "Upper tuple")->required();
  star_cmd->add_option("--s1", s1, "Lower tuple")->required();
  star_cmd->callback([&] {
    action = [&] {
      const SpacerTuple result = star(parse_tuple(s2), parse_tuple(s1));
      return Report{tuple_to_json(result), result.to_string() + "\n"};
    };
  });

  auto* reverse_cmd = app.add_subcommand("reverse", "Reverse a spacer tuple");
  reverse_cmd->add_option("--s", s, "Tuple")->required();
  reverse_cmd->callback([&] {
    action = [&] {
      const SpacerTuple t = parse_tuple(s);
      const SpacerTuple result = reverse(t);
      return Report{Json{{"reverse", tuple_to_json(result)}, {"palindrome", is_palindrome(t)}},
                    result.to_string() + "\n"};
    };
  });

  auto* compat_cmd = app.add_subcommand("compat", "Decide whether s occurs as a window of c*s'");
  compat_cmd->add_option("--s", s, "Tuple s")->required();
  compat_cmd->add_option("--s-prime", s_prime, "Tuple s'")->required();
  compat_cmd->callback([&] {
    action = [&] {
      const CompatibilityResult c = compatibility(parse_tuple(s), parse_tuple(s_prime));
      std::string text = c.compatible() ? "Compatible offset=" + std::to_string(c.offset) + " middle=" +
                                              (c.forced_middle ? std::to_string(*c.forced_middle) : "free")
                                        : "Incompatible";
      return Report{compat_json(c), text + "\n"};
    };
  });

  auto* word_cmd = app.add_subcommand("word", "Build the generating word v_n");
  word_cmd->add_option("--params", params_path, "Parameter JSON file ('-' for stdin)")->required();
  word_cmd->add_option("--level", level, "Level n")->required();
  word_cmd->callback([&] {
    action = [&] {
      const Word w = build_word(ctx.params(params_path), level, g.budget);
      return Report{Json{{"level", w.level}, {"length", w.symbols.size()}, {"word", w.symbols}}, w.symbols + "\n"};
    };
  });

  auto* parse_cmd = app.add_subcommand("parse", "Expected occurrences of v_n inside v_m, with gaps");
  parse_cmd->add_option("--params", params_path, "Parameter JSON file")->required();
  parse_cmd->add_option("--inner", inner, "Inner level n");
  parse_cmd->add_option("--outer", outer, "Outer level m (default inner + depth)");
  parse_cmd->add_option("--pattern", pattern, "Spacer pattern to search in the gap sequence");
  parse_cmd->add_flag("--verify", verify, "Re-check the expected-occurrence properties on the symbols");
  parse_cmd->callback([&] {
    action = [&] {
      const ParamSpec p = ctx.params(params_path);
      const std::size_t m = outer.value_or(inner + g.depth);
      const OccurrenceParse parse = expected_offsets(p, inner, m, g.budget);
      const GapSequence gaps = gap_sequence(parse);
      Json out{{"inner", inner}, {"outer", m}, {"count", parse.offsets.size()},
               {"offsets", parse.offsets}, {"gaps", gaps.gaps}};
      std::string text = "offsets " + join(parse.offsets) + "\ngaps " + join(gaps.gaps) + "\n";
      if (!pattern.empty()) {
        const auto hits = find_spacer_pattern(p, inner, m, parse_tuple(pattern), g.budget);
        out["pattern_matches"] = hits;
        text += "pattern matches " + std::to_string(hits.size()) + "\n";
      }
      if (verify) {
        const ExpectednessReport r = verify_expectedness_properties(p, inner, m, g.budget);
        out["properties"] = Json{{"coverage", property_json(r.coverage)},
                                 {"containment", property_json(r.containment)},
                                 {"non_overlap", property_json(r.non_overlap)},
                                 {"uniform_layout", property_json(r.uniform_layout)}};
        text += "properties " + std::string(r.all_pass() ? "pass" : "FAIL") + "\n";
      }
      return Report{out, text};
    };
  });

  auto* collapse_cmd = app.add_subcommand("collapse", "Merge prefix levels n0 and n0+1");
  collapse_cmd->add_option("--params", params_path, "Parameter JSON file")->required();
  collapse_cmd->add_option("--level", level, "Level n0")->required();
  collapse_cmd->add_option("--unroll", copies, "Cycle copies to move into the prefix first");
  collapse_cmd->callback([&] {
    action = [&] {
      const ParamSpec result = collapse_level(unroll(ctx.params(params_path), copies), level);
      const Json j = params_to_json(result);
      return Report{j, j.dump(2) + "\n"};
    };
  });

  auto* measure_cmd = app.add_subcommand("measure", "Exact normalizer and cylinder measures");
  measure_cmd->add_option("--params", params_path, "Parameter JSON file")->required();
  measure_cmd->add_option("--level", measure_level, "Level for cylinder and tower masses");
  measure_cmd->callback([&] {
    action = [&] {
      const ParamSpec p = ctx.params(params_path);
      const NormalizerResult z = normalizer(p);
      Json out{{"normalizer", {{"kind", z.exact() ? "Exact" : "LowerBound"}, {"value", rational_to_json(z.value)}}}};
      if (!z.exact()) out["normalizer"]["depth"] = z.depth;
      if (p.is_periodic()) {
        const SymbolMeasures sm = symbol_measures(p);
        out["mu_zero"] = rational_to_json(sm.zero);
        out["mu_one"] = rational_to_json(sm.one);
      }
      if (measure_level) {
        out["level"] = *measure_level;
        out["partial_normalizer"] = rational_to_json(partial_normalizer(p, *measure_level));
        if (p.is_periodic()) {
          out["cylinder_measure"] = rational_to_json(cylinder_measure(p, *measure_level));
          out["tower_mass"] = rational_to_json(tower_mass(p, *measure_level));
        }
      }
      std::string text = "normalizer " + std::string(z.exact() ? "exact " : "lower-bound ") + to_string(z.value) + "\n";
      Json rest = out;
      rest.erase("normalizer");
      return Report{out, text + measure_text(rest)};
    };
  });

  auto* conditions_cmd = app.add_subcommand("conditions", "Measure conditions and the canonical necessary condition");
  conditions_cmd->add_option("--params", params_path, "Parameter JSON file")->required();
  conditions_cmd->add_option("--up-to", up_to, "Check s_{n+1}*s_n for n <= this level");
  conditions_cmd->callback([&] {
    action = [&] {
      const ParamSpec p = ctx.params(params_path);
      const MeasureConditionReport m = check_measure_conditions(p);
      const CanonicalCheck c = up_to ? canonical_necessary(p, *up_to) : canonical_necessary(p);
      Json out{{"condition1", condition_name(m.condition1)},
               {"condition2", condition_name(m.condition2)},
               {"evidence_levels", m.evidence_levels},
               {"distinct_spacer_values", m.distinct_spacer_values},
               {"ones_density", rational_to_json(m.ones_density)},
               {"normalizer", rational_to_json(m.normalizer)},
               {"notes", m.notes},
               {"canonical_necessary",
                {{"holds", c.holds},
                 {"pairs_checked", c.pairs_checked},
                 {"first_failure", c.first_failure ? Json(*c.first_failure) : Json(nullptr)}}}};
      std::string text = "condition1 " + condition_name(m.condition1) + "\ncondition2 " +
                         condition_name(m.condition2) + "\ncanonical_necessary " + bool_word(c.holds);
      if (c.first_failure) text += " (fails at n=" + std::to_string(*c.first_failure) + ")";
      return Report{out, text + "\n"};
    };
  });

  auto* premises_cmd = app.add_subcommand("premises", "Check the non-isomorphism premises for two systems");
  premises_cmd->add_option("--params", params_path, "First parameter file")->required();
  premises_cmd->add_option("--other", other_path, "Second parameter file (default: inverse of the first)");
  premises_cmd->callback([&] {
    action = [&] {
      const ParamSpec a = ctx.params(params_path);
      const ParamSpec b = other_path.empty() ? invert_params(a) : ctx.params(other_path);
      const PremiseReport r = check_prop_premises(a, b, g.horizon);
      const std::string text = "condition1 " + bool_word(r.condition1) + "\ncondition2 " + bool_word(r.condition2) +
                               " S=" + std::to_string(r.spacer_bound) + "\ncondition3 " + bool_word(r.condition3) +
                               " R=" + std::to_string(r.cut_bound) + "\n";
      return Report{premises_to_json(r), text};
    };
  });

  auto* decide_cmd = app.add_subcommand("decide", "Decide whether the system is isomorphic to its inverse");
  decide_cmd->add_option("--params", params_path, "Parameter JSON file")->required();
  decide_cmd->callback([&] {
    action = [&] {
      const InverseDecision d = decide_self_inverse(ctx.params(params_path));
      std::string text = kind_name(d.kind);
      if (d.kind == InverseDecision::Kind::IsomorphicToInverse) text += " N=" + std::to_string(d.from_level);
      text += "\n" + d.reason + "\n";
      if (d.certificate) text += "certificate entries " + std::to_string(d.certificate->entries.size()) + "\n";
      return Report{decision_to_json(d), text};
    };
  });

  auto* witness_cmd = app.add_subcommand("witness", "Build the telescoped witness certificate");
  witness_cmd->add_option("--params", params_path, "Parameter JSON file")->required();
  witness_cmd->callback([&] {
    action = [&] {
      const WitnessCertificate cert = build_witness(ctx.params(params_path));
      return Report{certificate_to_json(cert), dump_certificate(cert)};
    };
  });

  auto* verify_cmd = app.add_subcommand("verify-cert", "Re-verify a certificate from scratch");
  verify_cmd->add_option("--cert", cert_path, "Certificate or decide/witness JSON report")->required();
  verify_cmd->callback([&] {
    action = [&] {
      const std::string text = ctx.read(cert_path);
      Json doc;
      try {
        doc = Json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::InvalidCertificate, std::string("malformed JSON: ") + e.what());
      }
      const Json raw = extract_certificate(doc);
      const WitnessCertificate cert = certificate_from_json(raw);
      const CertificateCheck check = verify_certificate(cert);
      const bool identical = certificate_to_json(cert).dump(2) == raw.dump(2);
      if (!check.ok) {
        std::string why;
        for (const auto& f : check.failures) why += (why.empty() ? "" : "; ") + f;
        throw Error(ErrorCode::InvalidCertificate, why);
      }
      return Report{Json{{"verified", true}, {"byte_identical", identical}, {"entries", cert.entries.size()}},
                    std::string("verified") + (identical ? "" : " (re-serialization differs)") + "\n"};
    };
  });

  auto* sweep_cmd = app.add_subcommand("sweep", "Exhaustive spacer-algebra sweeps");
  sweep_cmd->add_option("--rmax", r_max, "Largest cut count")->check(CLI::Range(2, 12));
  sweep_cmd->add_option("--smax", s_max, "Largest spacer value");
  sweep_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));
  sweep_cmd->callback([&] {
    action = [&] {
      const SweepResult lemma = lemma_sweep(r_max, s_max, threads);
      const SweepResult symmetry = perp_symmetry_sweep(r_max, s_max, threads);
      const std::string text = "lemma pairs " + std::to_string(lemma.checked) + ", counterexamples " +
                               std::to_string(lemma.counterexamples.size()) + "\nperp symmetry pairs " +
                               std::to_string(symmetry.checked) + ", violations " +
                               std::to_string(symmetry.counterexamples.size()) + "\n";
      return Report{Json{{"rmax", r_max}, {"smax", s_max}, {"lemma", sweep_json(lemma)},
                         {"perp_symmetry", sweep_json(symmetry)}},
                    text};
    };
  });

  std::ostringstream out, err;
  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    if (!args.empty()) args.pop_back();  // program name
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = app.exit(e, out, err);
    if (outcome.exit_code != 0) outcome.exit_code = 2;
    outcome.out = out.str();
    outcome.err = err.str();
    return outcome;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Json envelope{{"command", command}, {"version", std::string(kVersion)}};
  try {
    Report report = action();
    envelope["input_digest"] = ctx.digest();
    envelope["result"] = std::move(report.payload);
    outcome.out = g.json ? envelope.dump(2) + "\n" : report.text;
    if (command == "sweep" && (envelope["result"]["lemma"]["counterexamples"].size() +
                                   envelope["result"]["perp_symmetry"]["counterexamples"].size() > 0)) {
      outcome.exit_code = 1;
      outcome.err = "error: sweep found counterexamples\n";
    }
  } catch (const Error& e) {
    outcome.exit_code = 1;
    envelope["input_digest"] = ctx.digest();
    envelope["error"] = Json{{"name", std::string(e.name())}, {"message", e.what()}};
    if (g.json) outcome.out = envelope.dump(2) + "\n";
    outcome.err = std::string("error: ") + e.what() + "\n";
  }
  return outcome;
}

}  // namespace rankone::cli
