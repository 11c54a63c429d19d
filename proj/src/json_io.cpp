#include "rankone/json_io.hpp"

#include "rankone/error.hpp"

namespace rankone {

namespace {

Json levels_to_json(const std::vector<LevelSpec>& levels) {
  Json out = Json::array();
  for (const auto& l : levels) out.push_back(Json{{"r", l.r}, {"s", tuple_to_json(l.s)}});
  return out;
}

[[noreturn]] void bad_params(const std::string& why) { throw Error(ErrorCode::InvalidParams, why); }

std::uint64_t natural(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    bad_params(where + " must be a natural number");
  }
  return j.get<std::uint64_t>();
}

std::vector<LevelSpec> levels_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad_params(where + " must be an array");
  std::vector<LevelSpec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& level = j[i];
    const std::string tag = where + "[" + std::to_string(i) + "]";
    if (!level.is_object() || !level.contains("r") || !level.contains("s")) bad_params(tag + " needs fields r and s");
    const std::uint64_t r = natural(level["r"], tag + ".r");
    if (!level["s"].is_array() || level["s"].empty()) bad_params(tag + ".s must be a nonempty array");
    std::vector<Spacer> s;
    for (const auto& v : level["s"]) s.push_back(natural(v, tag + ".s"));
    out.emplace_back(static_cast<std::size_t>(r), SpacerTuple(std::move(s)));
  }
  return out;
}

template <typename T>
T cert_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::InvalidCertificate, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidCertificate, std::string("field '") + key + "': " + e.what());
  }
}

SpacerTuple tuple_from_json(const Json& j) {
  try {
    return SpacerTuple(j.get<std::vector<Spacer>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidCertificate, std::string("bad spacer tuple: ") + e.what());
  }
}

ParamSpec cert_params(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::InvalidCertificate, std::string("missing field '") + key + "'");
  try {
    return params_from_json(j.at(key));
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidCertificate, std::string(key) + ": " + e.what());
  }
}

}  // namespace

Json tuple_to_json(const SpacerTuple& s) { return Json(std::vector<Spacer>(s.values().begin(), s.values().end())); }

Json params_to_json(const ParamSpec& params) {
  Json tail = params.cycle ? Json{{"type", "periodic"}, {"cycle", levels_to_json(*params.cycle)}}
                           : Json{{"type", "unspecified"}};
  return Json{{"prefix", levels_to_json(params.prefix)}, {"tail", tail}};
}

ParamSpec params_from_json(const Json& j) {
  if (!j.is_object()) bad_params("parameter document must be an object");
  ParamSpec out;
  if (j.contains("prefix")) out.prefix = levels_from_json(j["prefix"], "prefix");
  if (!j.contains("tail") || !j["tail"].is_object() || !j["tail"].contains("type")) {
    bad_params("tail must be an object with a type");
  }
  const Json& tail = j["tail"];
  const std::string type = tail["type"].is_string() ? tail["type"].get<std::string>() : "";
  if (type == "periodic") {
    if (!tail.contains("cycle")) bad_params("periodic tail needs a cycle");
    out.cycle = levels_from_json(tail["cycle"], "tail.cycle");
    if (out.cycle->empty()) bad_params("periodic tail needs a nonempty cycle");
  } else if (type != "unspecified") {
    bad_params("tail.type must be \"periodic\" or \"unspecified\"");
  }
  return out;
}

ParamSpec parse_params(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad_params(std::string("malformed JSON: ") + e.what());
  }
  return params_from_json(j);
}

Json rational_to_json(const mpq_class& q) {
  return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Json premises_to_json(const PremiseReport& report) {
  return Json{
      {"evidence", evidence_name(report.evidence)},
      {"levels_checked", report.levels_checked},
      {"condition1",
       {{"holds", report.condition1},
        {"first_failure", report.condition1_failure ? Json(*report.condition1_failure) : Json(nullptr)}}},
      {"condition2", {{"holds", report.condition2}, {"S", report.spacer_bound}}},
      {"condition3",
       {{"holds", report.condition3},
        {"R", report.cut_bound},
        {"perp_levels", report.perp_levels},
        {"certified_infinite", report.certified_infinite}}},
  };
}

PremiseReport premises_from_json(const Json& j) {
  PremiseReport r;
  const std::string evidence = cert_field<std::string>(j, "evidence");
  if (evidence == "PeriodicCertified") {
    r.evidence = Evidence::PeriodicCertified;
  } else if (evidence == "FiniteHorizon") {
    r.evidence = Evidence::FiniteHorizon;
  } else {
    throw Error(ErrorCode::InvalidCertificate, "unknown evidence '" + evidence + "'");
  }
  r.levels_checked = cert_field<std::size_t>(j, "levels_checked");
  const Json c1 = cert_field<Json>(j, "condition1");
  const Json c2 = cert_field<Json>(j, "condition2");
  const Json c3 = cert_field<Json>(j, "condition3");
  r.condition1 = cert_field<bool>(c1, "holds");
  const Json failure = cert_field<Json>(c1, "first_failure");
  if (!failure.is_null()) r.condition1_failure = cert_field<std::size_t>(c1, "first_failure");
  r.condition2 = cert_field<bool>(c2, "holds");
  r.spacer_bound = cert_field<Spacer>(c2, "S");
  r.condition3 = cert_field<bool>(c3, "holds");
  r.cut_bound = cert_field<std::size_t>(c3, "R");
  r.perp_levels = cert_field<std::vector<std::size_t>>(c3, "perp_levels");
  r.certified_infinite = cert_field<bool>(c3, "certified_infinite");
  return r;
}

Json certificate_to_json(const WitnessCertificate& cert) {
  Json entries = Json::array();
  for (const auto& e : cert.entries) {
    entries.push_back(Json{{"telescoped_level", e.telescoped_level},
                           {"base_level", e.base_level},
                           {"combined_r", e.combined_r},
                           {"combined_s", tuple_to_json(e.combined_s)},
                           {"perp_verified", e.perp_verified},
                           {"r_bound", e.r_bound}});
  }
  return Json{{"params", params_to_json(cert.params)},
              {"telescoped", params_to_json(cert.telescoped)},
              {"level_map", cert.level_map},
              {"max_cut", cert.max_cut},
              {"max_spacer", cert.max_spacer},
              {"entries", entries},
              {"premises", premises_to_json(cert.premises)},
              {"words_spot_checked", cert.words_spot_checked}};
}

WitnessCertificate certificate_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidCertificate, "certificate must be an object");
  WitnessCertificate cert;
  cert.params = cert_params(j, "params");
  cert.telescoped = cert_params(j, "telescoped");
  cert.level_map = cert_field<std::vector<std::size_t>>(j, "level_map");
  cert.max_cut = cert_field<std::size_t>(j, "max_cut");
  cert.max_spacer = cert_field<Spacer>(j, "max_spacer");
  for (const auto& e : cert_field<Json>(j, "entries")) {
    WitnessEntry entry;
    entry.telescoped_level = cert_field<std::size_t>(e, "telescoped_level");
    entry.base_level = cert_field<std::size_t>(e, "base_level");
    entry.combined_r = cert_field<std::size_t>(e, "combined_r");
    entry.combined_s = tuple_from_json(cert_field<Json>(e, "combined_s"));
    entry.perp_verified = cert_field<bool>(e, "perp_verified");
    entry.r_bound = cert_field<std::size_t>(e, "r_bound");
    cert.entries.push_back(std::move(entry));
  }
  cert.premises = premises_from_json(cert_field<Json>(j, "premises"));
  cert.words_spot_checked = cert_field<std::size_t>(j, "words_spot_checked");
  return cert;
}

std::string dump_certificate(const WitnessCertificate& cert) { return certificate_to_json(cert).dump(2) + "\n"; }

Json decision_to_json(const InverseDecision& decision) {
  Json out{{"verdict", kind_name(decision.kind)}};
  if (decision.kind == InverseDecision::Kind::IsomorphicToInverse) out["N"] = decision.from_level;
  out["reason"] = decision.reason;
  out["hypotheses"] = Json{{"bounded", decision.hypotheses.bounded},
                           {"R", decision.hypotheses.max_cut},
                           {"S", decision.hypotheses.max_spacer},
                           {"canonical_necessary", decision.hypotheses.canonical_necessary},
                           {"canonical_pairs_checked", decision.hypotheses.canonical_pairs_checked}};
  if (decision.certificate) out["certificate"] = certificate_to_json(*decision.certificate);
  return out;
}

}  // namespace rankone
