#include "bba/json_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "bba/formula.hpp"

namespace bba {

Agenda agenda_from_json(const Json& j) {
  if (j.contains("atoms")) {
    std::vector<std::string> atoms = j.at("atoms").get<std::vector<std::string>>();
    std::vector<std::string> formulas = j.at("formulas").get<std::vector<std::string>>();
    return compile_agenda_from_formulas(atoms, formulas);
  }
  if (!j.contains("worlds"))
    throw Error(Errc::BadInput, "agenda JSON needs either \"worlds\" or \"atoms\"");

  Universe u;
  if (j.at("worlds").is_number_integer()) {
    u = Universe::of(j.at("worlds").get<int>());
  } else {
    u = Universe::named(j.at("worlds").get<std::vector<std::string>>());
  }
  std::vector<WorldSet> sets;
  std::vector<std::string> names;
  for (const Json& issue : j.at("issues")) {
    WorldSet s = 0;
    for (const Json& w : issue.at("worlds")) {
      int wi = -1;
      if (w.is_number_integer()) {
        wi = w.get<int>();
      } else {
        std::string name = w.get<std::string>();
        for (int k = 0; k < u.size; ++k)
          if (u.world_name(k) == name) wi = k;
        if (wi < 0) throw Error(Errc::BadInput, "unknown world name: " + name);
      }
      if (wi < 0 || wi >= u.size)
        throw Error(Errc::BadInput, "world index out of range");
      s |= WorldSet{1} << wi;
    }
    sets.push_back(s);
    names.push_back(issue.value("name", ""));
  }
  bool auto_close = j.value("auto_close", true);
  return make_agenda(u, sets, auto_close, names);
}

Agenda load_agenda(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadInput, "cannot open " + path);
  Json j;
  in >> j;
  return agenda_from_json(j);
}

Profile profile_from_json(const Json& j) {
  Profile pr;
  for (const Json& member : j.at("masses")) {
    MassFunction p;
    for (const Json& m : member) {
      if (m.is_array()) {
        p.mass.push_back(Rat(m.at(0).get<long long>(), m.at(1).get<long long>()));
      } else {
        p.mass.push_back(Rat(m.get<long long>()));
      }
    }
    pr.members.push_back(std::move(p));
  }
  if (pr.members.empty()) throw Error(Errc::BadInput, "profile has no individuals");
  for (const MassFunction& p : pr.members)
    validate_mass(p, static_cast<int>(pr.members[0].mass.size()));
  return pr;
}

Profile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadInput, "cannot open " + path);
  Json j;
  in >> j;
  return profile_from_json(j);
}

static Json world_set_json(const Universe& u, WorldSet s) {
  Json arr = Json::array();
  for (int w = 0; w < u.size; ++w)
    if (s >> w & 1) arr.push_back(u.world_name(w));
  return arr;
}

static Json selection_json(const Agenda& a, IssueSel sel) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sel >> i & 1) arr.push_back(a.names[i]);
  return arr;
}

Json agenda_to_json(const Agenda& a) {
  Json j;
  Json worlds = Json::array();
  for (int w = 0; w < a.universe.size; ++w) worlds.push_back(a.universe.world_name(w));
  j["worlds"] = worlds;
  Json issues = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json issue;
    issue["name"] = a.names[i];
    issue["worlds"] = world_set_json(a.universe, a.issues[i]);
    issue["complement"] = a.names[a.complement_of(i)];
    issues.push_back(issue);
  }
  j["issues"] = issues;
  return j;
}

Json rat_to_json(const Rat& r) {
  if (r.denominator() == 1) return r.numerator();
  return Json::array({r.numerator(), r.denominator()});
}

Json mis_to_json(const Agenda& a, const MisFamily& mis) {
  Json arr = Json::array();
  for (IssueSel y : mis.sets) arr.push_back(selection_json(a, y));
  return arr;
}

Json flags_to_json(const Agenda& a, const PropertyFlags& f) {
  Json j;
  j["path_connected"] = f.path_connected;
  j["even_negatable"] = f.even_negatable;
  j["pair_negatable"] = f.pair_negatable;
  j["non_simple"] = f.non_simple;
  j["negation_connected"] = f.negation_connected;
  j["blocked"] = f.blocked;
  j["h0"] = selection_json(a, f.h0);
  j["median_points"] = world_set_json(a.universe, f.median_points);
  Json w;
  if (f.en_witness) {
    w["even_negation"] = {{"mis", selection_json(a, f.en_witness->y)},
                          {"negated", selection_json(a, f.en_witness->z)}};
  }
  if (f.pair_witness) {
    w["pair_negation"] = {{"mis", selection_json(a, f.pair_witness->y)},
                          {"negated", selection_json(a, f.pair_witness->z)}};
  }
  if (f.ns_witness) w["non_simple_mis"] = selection_json(a, *f.ns_witness);
  j["witnesses"] = w;
  return j;
}

Json classification_to_json(const Agenda& a, const ClassificationReport& rep) {
  Json j;
  j["flags"] = flags_to_json(a, rep.flags);
  j["mis"] = mis_to_json(a, rep.mis);
  j["verdicts"] = {
      {"oligarchy",
       {{"applies", rep.oligarchy_applies},
        {"axioms", "UD, ZP, CP, IND + CDC + non-oligarchy"},
        {"condition", "path-connected and even-negatable"}}},
      {"triviality",
       {{"applies", rep.triviality_applies},
        {"axioms", "UD, ZP, CP, IND + CDC + AN + non-triviality"},
        {"condition", "negation-connected"}}},
      {"impossibility",
       {{"applies", rep.impossibility_applies},
        {"axioms", "UD, CP, IND + CCS and CCP"},
        {"condition", "blocked"}}},
  };
  return j;
}

Json profile_to_json(const Profile& pr) {
  Json members = Json::array();
  for (const MassFunction& p : pr.members) {
    Json masses = Json::array();
    for (const Rat& m : p.mass) masses.push_back(Json::array({m.numerator(), m.denominator()}));
    members.push_back(masses);
  }
  return Json{{"masses", members}};
}

Json axiom_report_to_json(const Agenda& a, const AxiomReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["grid"] = rep.d;
  j["profiles"] = rep.profile_count;
  j["note"] = AxiomReport::kEvidenceNote;
  Json verdicts;
  for (const auto& [ax, v] : rep.verdicts) {
    Json vj;
    vj["status"] = v.status == VerdictStatus::Pass   ? "pass"
                   : v.status == VerdictStatus::Fail ? "fail"
                                                     : "not-checked";
    if (v.witness) {
      Json w;
      w["profile"] = profile_to_json(v.witness->profile);
      if (v.witness->profile2) w["profile2"] = profile_to_json(*v.witness->profile2);
      if (v.witness->issue) w["issue"] = a.names[*v.witness->issue];
      if (v.witness->issue2) w["issue2"] = a.names[*v.witness->issue2];
      if (!v.witness->permutation.empty()) w["permutation"] = v.witness->permutation;
      vj["witness"] = w;
    }
    verdicts[axiom_name(ax)] = vj;
  }
  j["verdicts"] = verdicts;
  return j;
}

Json verification_to_json(const VerificationRun& run) {
  Json j;
  j["universe_size"] = run.universe_size;
  j["max_pairs"] = run.max_pairs;
  j["agendas_checked"] = run.agendas_checked;
  j["check_counts"] = run.check_counts;
  j["failures"] = run.failures;
  j["seconds"] = run.seconds;
  j["ok"] = run.ok();
  return j;
}

}  // namespace bba
