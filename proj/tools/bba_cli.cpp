// Command-line front end: agenda analysis, classification, rule checking,
// and the exhaustive lemma verifier.

#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "bba/json_io.hpp"

namespace {

using namespace bba;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitLimit = 3;
constexpr int kExitCounterexample = 4;

std::size_t resolve_issue(const Agenda& a, const std::string& ref) {
  auto by_name = a.index_of_name(ref);
  bool numeric = !ref.empty() && std::all_of(ref.begin(), ref.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  if (by_name) {
    if (numeric)
      std::cerr << "warning: '" << ref << "' matches an issue name; names win over indices\n";
    return *by_name;
  }
  if (numeric) {
    std::size_t idx = std::stoul(ref);
    if (idx < a.size()) return idx;
  }
  throw Error(Errc::IssueNotInAgenda, "no issue named or indexed '" + ref + "'");
}

void print_flags_table(const Agenda& a, const PropertyFlags& f) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "path-connected      " << yn(f.path_connected) << "\n"
            << "even-negatable      " << yn(f.even_negatable) << "\n"
            << "pair-negatable      " << yn(f.pair_negatable) << "\n"
            << "non-simple          " << yn(f.non_simple) << "\n"
            << "negation-connected  " << yn(f.negation_connected) << "\n"
            << "blocked             " << yn(f.blocked) << "\n"
            << "H0                  " << selection_to_string(a, f.h0) << "\n"
            << "median points       " << world_set_to_string(a.universe, f.median_points)
            << "\n";
  if (f.en_witness)
    std::cout << "EN witness          negate " << selection_to_string(a, f.en_witness->z)
              << " in " << selection_to_string(a, f.en_witness->y) << "\n";
  if (f.ns_witness)
    std::cout << "NS witness          " << selection_to_string(a, *f.ns_witness) << "\n";
}

std::uint32_t parse_members(const std::string& csv, int n) {
  std::uint32_t mask = 0;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int who = std::stoi(tok);  // 1-based on the command line
    if (who < 1 || who > n) throw Error(Errc::BadInput, "member index out of range: " + tok);
    mask |= std::uint32_t{1} << (who - 1);
  }
  if (mask == 0) throw Error(Errc::BadInput, "empty member list");
  return mask;
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(text));
  return Rat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

int run(int argc, char** argv) {
  CLI::App app{"Agenda analysis for binarizing belief aggregation"};
  app.require_subcommand(1);

  std::string agenda_path, from_ref, to_ref, rule = "trivial", members_csv, axioms_csv,
              threshold_str = "1/2", profile_path;
  bool json_out = false, strict = false;
  int n = 3, grid = 1, worlds = 3, max_pairs = 3;
  std::size_t mis_cap = kDefaultMisIssueCap;
  int max_size = -1;

  auto add_agenda_arg = [&](CLI::App* cmd) {
    cmd->add_option("agenda", agenda_path, "agenda JSON file")->required();
    cmd->add_flag("--json", json_out, "emit JSON");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "compute all agenda properties");
  add_agenda_arg(analyze);

  CLI::App* mis_cmd = app.add_subcommand("mis", "list minimally inconsistent subsets");
  add_agenda_arg(mis_cmd);
  mis_cmd->add_option("--max-size", max_size, "largest subset size to report");
  mis_cmd->add_option("--cap", mis_cap, "issue-count cap for the exhaustive scan");

  CLI::App* path_cmd = app.add_subcommand("path", "conditional-entailment chain");
  add_agenda_arg(path_cmd);
  path_cmd->add_option("--from", from_ref, "source issue (name or index)")->required();
  path_cmd->add_option("--to", to_ref, "target issue (name or index)")->required();

  CLI::App* median_cmd = app.add_subcommand("median", "list median points");
  add_agenda_arg(median_cmd);

  CLI::App* classify_cmd = app.add_subcommand("classify", "impossibility classification");
  add_agenda_arg(classify_cmd);

  CLI::App* rule_cmd = app.add_subcommand("check-rule", "check axioms of a rule on a grid");
  add_agenda_arg(rule_cmd);
  rule_cmd->add_option("--rule", rule, "oligarchy|trivial|dictatorship|threshold|unanimity-default");
  rule_cmd->add_option("--members", members_csv, "oligarchy members, 1-based, e.g. 1,2");
  rule_cmd->add_option("--n", n, "number of individuals");
  rule_cmd->add_option("--grid", grid, "grid denominator d");
  rule_cmd->add_option("--axioms", axioms_csv, "comma-separated axiom list");
  rule_cmd->add_option("--threshold", threshold_str, "threshold value, e.g. 1/2");
  rule_cmd->add_flag("--strict", strict, "strict threshold comparison");
  rule_cmd->add_option("--profile", profile_path, "evaluate on one profile instead of the grid");

  CLI::App* verify_cmd = app.add_subcommand("verify-lemmas", "exhaustive lemma verification");
  verify_cmd->add_option("--worlds", worlds, "universe size");
  verify_cmd->add_option("--max-pairs", max_pairs, "max complement pairs per agenda");
  verify_cmd->add_flag("--json", json_out, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  auto dump = [&](const Json& j) { std::cout << j.dump(2) << "\n"; };

  if (*analyze) {
    Agenda a = load_agenda(agenda_path);
    MisFamily mis = minimally_inconsistent_subsets(a);
    EntailmentGraph g = entailment_graph(a, mis);
    PropertyFlags f = compute_flags(a, mis, g);
    if (json_out) {
      dump(flags_to_json(a, f));
    } else {
      print_flags_table(a, f);
    }
  } else if (*mis_cmd) {
    Agenda a = load_agenda(agenda_path);
    MisFamily mis = minimally_inconsistent_subsets(a, max_size, mis_cap);
    if (mis_cap > kDefaultMisIssueCap)
      std::cerr << "warning: raised enumeration cap; expect exponential cost\n";
    if (json_out) {
      dump(mis_to_json(a, mis));
    } else {
      for (IssueSel y : mis.sets) std::cout << selection_to_string(a, y) << "\n";
    }
  } else if (*path_cmd) {
    Agenda a = load_agenda(agenda_path);
    MisFamily mis = minimally_inconsistent_subsets(a);
    EntailmentGraph g = entailment_graph(a, mis);
    std::size_t from = resolve_issue(a, from_ref), to = resolve_issue(a, to_ref);
    auto chain = path_witness(g, from, to);
    if (!chain) {
      std::cout << "no path from " << a.names[from] << " to " << a.names[to] << "\n";
      return kExitOk;
    }
    if (json_out) {
      Json arr = Json::array();
      std::size_t cur = from;
      for (const PathHop& hop : *chain) {
        arr.push_back({{"from", a.names[cur]},
                       {"to", a.names[hop.issue]},
                       {"witness", Json::array()}});
        for (int b : bits_of(hop.witness)) arr.back()["witness"].push_back(a.names[static_cast<std::size_t>(b)]);
        cur = hop.issue;
      }
      dump(arr);
    } else {
      std::size_t cur = from;
      for (const PathHop& hop : *chain) {
        std::cout << a.names[cur] << " |=* " << a.names[hop.issue] << "   (Y = "
                  << selection_to_string(a, hop.witness) << ")\n";
        cur = hop.issue;
      }
    }
  } else if (*median_cmd) {
    Agenda a = load_agenda(agenda_path);
    MisFamily mis = minimally_inconsistent_subsets(a);
    WorldSet m = median_points(a, mis);
    if (json_out) {
      Json arr = Json::array();
      for (int w = 0; w < a.universe.size; ++w)
        if (m >> w & 1) arr.push_back(a.universe.world_name(w));
      dump(arr);
    } else {
      std::cout << world_set_to_string(a.universe, m) << "\n";
    }
  } else if (*classify_cmd) {
    Agenda a = load_agenda(agenda_path);
    ClassificationReport rep = classify(a);
    if (json_out) {
      dump(classification_to_json(a, rep));
    } else {
      print_flags_table(a, rep.flags);
      auto row = [&](const char* label, bool applies, const char* axioms, const char* cond) {
        std::cout << label << (applies ? "applies" : "does not apply") << "  [" << axioms
                  << " <=> " << cond << "]\n";
      };
      row("(1) oligarchy result:      ", rep.oligarchy_applies,
          "UD, ZP, CP, IND + CDC", "PC and EN");
      row("(2) triviality result:     ", rep.triviality_applies,
          "UD, ZP, CP, IND + CDC + AN", "NC");
      row("(3) impossibility result:  ", rep.impossibility_applies,
          "UD, CP, IND + CCS and CCP", "blocked");
    }
  } else if (*rule_cmd) {
    Agenda a = load_agenda(agenda_path);
    AggregatorSpec spec;
    if (rule == "oligarchy") {
      spec = AggregatorSpec::oligarchy(n, parse_members(members_csv, n));
    } else if (rule == "trivial") {
      spec = AggregatorSpec::trivial(n);
    } else if (rule == "dictatorship") {
      spec = AggregatorSpec::dictatorship(n, members_csv.empty() ? 0 : std::stoi(members_csv) - 1);
    } else if (rule == "threshold") {
      spec = AggregatorSpec::with_threshold(n, parse_rat(threshold_str), strict);
    } else if (rule == "unanimity-default") {
      IssueSel def = 0;
      std::stringstream ss(members_csv);
      std::string tok;
      while (std::getline(ss, tok, ',')) def |= IssueSel{1} << resolve_issue(a, tok);
      spec = AggregatorSpec::unanimity_default(n, def);
    } else {
      throw Error(Errc::BadInput, "unknown rule: " + rule);
    }

    if (!profile_path.empty()) {
      Profile pr = load_profile(profile_path);
      spec.n = static_cast<int>(pr.n());
      if (spec.kind == RuleKind::Trivial) spec.members = (std::uint32_t{1} << spec.n) - 1;
      BinaryBelief bel = evaluate(spec, pr, a);
      if (json_out) {
        Json j;
        j["accepted"] = Json::array();
        for (std::size_t i = 0; i < a.size(); ++i)
          if (bel.accepted >> i & 1) j["accepted"].push_back(a.names[i]);
        j["consistent"] = is_consistent_belief(a, bel);
        j["deductively_closed"] = is_deductively_closed(a, bel);
        j["complete"] = is_complete_belief(a, bel);
        dump(j);
      } else {
        std::cout << "accepted: " << selection_to_string(a, bel.accepted) << "\n"
                  << "consistent: " << (is_consistent_belief(a, bel) ? "yes" : "no") << "\n"
                  << "deductively closed: " << (is_deductively_closed(a, bel) ? "yes" : "no")
                  << "\n"
                  << "complete: " << (is_complete_belief(a, bel) ? "yes" : "no") << "\n";
      }
      return kExitOk;
    }

    std::set<Axiom> axioms;
    if (axioms_csv.empty()) {
      axioms = {Axiom::CP, Axiom::ZP, Axiom::AN, Axiom::IND, Axiom::SYS,
                Axiom::MON, Axiom::CDC, Axiom::CCS, Axiom::CCP};
    } else {
      std::stringstream ss(axioms_csv);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        auto ax = axiom_from_name(tok);
        if (!ax) throw Error(Errc::BadInput, "unknown axiom: " + tok);
        axioms.insert(*ax);
      }
    }
    AxiomReport rep = check_axioms(spec, a, grid, axioms);
    if (json_out) {
      dump(axiom_report_to_json(a, rep));
    } else {
      std::cout << "grid d=" << grid << ", n=" << rep.n << ", " << rep.profile_count
                << " profiles (" << AxiomReport::kEvidenceNote << ")\n";
      for (const auto& [ax, v] : rep.verdicts)
        std::cout << axiom_name(ax) << ": "
                  << (v.status == VerdictStatus::Pass ? "pass" : "fail") << "\n";
    }
  } else if (*verify_cmd) {
    VerificationRun run = verify_lemmas(worlds, max_pairs);
    VerificationRun alg = verify_algebra_lemma(worlds);
    if (json_out) {
      Json j;
      j["agenda_sweep"] = verification_to_json(run);
      j["algebra_sweep"] = verification_to_json(alg);
      dump(j);
    } else {
      std::cout << "agendas checked: " << run.agendas_checked << " ("
                << run.seconds << "s), algebras: " << alg.agendas_checked << "\n";
      for (const auto& [k, v] : run.check_counts)
        std::cout << "  " << k << ": " << v << "\n";
      for (const std::string& f : run.failures) std::cout << "FAIL " << f << "\n";
      for (const std::string& f : alg.failures) std::cout << "FAIL " << f << "\n";
    }
    if (!run.ok() || !alg.ok()) return kExitCounterexample;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bba::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == bba::Errc::LimitExceeded ? kExitLimit : kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
