#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <string>

#include "rankone/inverse.hpp"
#include "rankone/params.hpp"

namespace rankone {

using Json = nlohmann::ordered_json;

// {"prefix": [{"r": 3, "s": [0, 1]}, ...],
//  "tail": {"type": "periodic", "cycle": [...]} | {"type": "unspecified"}}
Json params_to_json(const ParamSpec& params);
// Throws InvalidParams on any schema violation.
ParamSpec params_from_json(const Json& j);
ParamSpec parse_params(const std::string& text);

// {"num": "3", "den": "2"}
Json rational_to_json(const mpq_class& q);

Json tuple_to_json(const SpacerTuple& s);
Json premises_to_json(const PremiseReport& report);
PremiseReport premises_from_json(const Json& j);

Json certificate_to_json(const WitnessCertificate& cert);
// Throws InvalidCertificate on schema violations.
WitnessCertificate certificate_from_json(const Json& j);

// Canonical text form of a certificate: two-space indented, trailing newline.
std::string dump_certificate(const WitnessCertificate& cert);

Json decision_to_json(const InverseDecision& decision);

}  // namespace rankone
