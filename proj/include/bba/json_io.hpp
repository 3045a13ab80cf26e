#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "bba/aggregators.hpp"
#include "bba/classifier.hpp"
#include "bba/oracle.hpp"

namespace bba {

using Json = nlohmann::json;

// Two accepted agenda forms, detected by key:
//   {"worlds": <int or [names]>, "issues": [{"name": str?, "worlds": [int...]}...],
//    "auto_close": bool}
//   {"atoms": ["p","q"], "formulas": ["p", "q", "p & q"]}
Agenda agenda_from_json(const Json& j);
Agenda load_agenda(const std::string& path);

// {"masses": [[[num,den], ...] per individual]}
Profile profile_from_json(const Json& j);
Profile load_profile(const std::string& path);

Json agenda_to_json(const Agenda& a);
Json flags_to_json(const Agenda& a, const PropertyFlags& f);
Json mis_to_json(const Agenda& a, const MisFamily& mis);
Json classification_to_json(const Agenda& a, const ClassificationReport& rep);
Json axiom_report_to_json(const Agenda& a, const AxiomReport& rep);
Json verification_to_json(const VerificationRun& run);
Json profile_to_json(const Profile& pr);
Json rat_to_json(const Rat& r);

}  // namespace bba
