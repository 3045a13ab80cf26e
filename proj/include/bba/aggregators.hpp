#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "bba/beliefs.hpp"

namespace bba {

enum class RuleKind { Oligarchy, Trivial, Dictatorship, Threshold, UnanimityDefault };

struct AggregatorSpec {
  RuleKind kind = RuleKind::Trivial;
  int n = 1;
  std::uint32_t members = 0;   // oligarchy/dictatorship, bit per individual
  Rat threshold = Rat(1, 2);   // threshold rules
  bool strict = false;
  IssueSel default_set = 0;    // unanimity-default: issues accepted by default

  static AggregatorSpec oligarchy(int n, std::uint32_t members);
  static AggregatorSpec trivial(int n);
  static AggregatorSpec dictatorship(int n, int who);
  static AggregatorSpec with_threshold(int n, Rat t, bool strict);
  static AggregatorSpec unanimity_default(int n, IssueSel default_set);
};

BinaryBelief evaluate(const AggregatorSpec& spec, const Profile& pr, const Agenda& a);

enum class Axiom { CP, ZP, AN, IND, SYS, MON, CDC, CCS, CCP };

const char* axiom_name(Axiom ax);
std::optional<Axiom> axiom_from_name(const std::string& name);

enum class VerdictStatus { Pass, Fail, NotChecked };

// A failing check always carries enough data to replay it through evaluate.
struct AxiomWitness {
  Profile profile;
  std::optional<Profile> profile2;
  std::optional<std::size_t> issue;
  std::optional<std::size_t> issue2;
  std::vector<int> permutation;  // AN only
};

struct AxiomVerdict {
  VerdictStatus status = VerdictStatus::NotChecked;
  std::optional<AxiomWitness> witness;
};

struct AxiomReport {
  int n = 0, d = 0;
  std::size_t profile_count = 0;
  std::map<Axiom, AxiomVerdict> verdicts;
  // A grid sweep can refute an axiom but never prove it; "pass" means no
  // counterexample among the enumerated profiles.
  static constexpr const char* kEvidenceNote = "grid evidence only";
};

AxiomReport check_axioms(const AggregatorSpec& spec, const Agenda& a, int d,
                         const std::set<Axiom>& axioms);

struct GTable {
  int n = 0, d = 0;
  std::map<std::vector<Rat>, int> entries;
};

// Reads the systematicity function off the grid; throws NotSystematic on a
// conflicting pair of observations.
GTable extract_g(const AggregatorSpec& spec, const Agenda& a, int d);

struct FactResult {
  bool pass = true;
  std::vector<std::vector<Rat>> witness;  // offending vectors, when failing
  std::size_t skipped = 0;                // fact 2: combinations off the grid
};

FactResult check_fact1(const GTable& g);    // a <= b, g(a)=1  =>  g(b)=1
FactResult check_fact2(const GTable& g);    // g(a)=g(b)=1, a+b-1 >= 0  =>  g(a+b-1)=1
FactResult check_fact1pp(const GTable& g);  // g(a)=1  =>  g(c)=1 for all c >= |2a-1|

struct TableSweep {
  std::size_t tables_enumerated = 0;
  std::size_t survivors = 0;
  bool all_survivors_oligarchic = true;
  std::optional<GTable> non_oligarchic;  // first one found, if any
  std::vector<GTable> surviving_tables;
};

bool table_is_oligarchic(const GTable& g);

// Enumerates systematic rules given by total 0/1 tables on the grid
// (optionally monotone only), keeps those passing every required axiom on
// the grid.  Results are grid evidence only.
TableSweep sweep_systematic_tables(const Agenda& a, int n, int d,
                                   const std::set<Axiom>& required,
                                   bool monotone_only = true,
                                   std::size_t point_cap = 20);

std::optional<GTable> search_counterexample(const Agenda& a, int n, int d,
                                            const std::set<Axiom>& required,
                                            bool monotone_only = true);

}  // namespace bba
