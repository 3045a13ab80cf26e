#pragma once

#include <map>
#include <string>
#include <vector>

#include "bba/properties.hpp"

namespace bba {

// All complement-closed agendas built from at most max_pairs complement
// pairs of contingent subsets of the universe, canonical order.
std::vector<Agenda> enumerate_agendas(int universe_size, int max_pairs);

// Contingent parts of every algebra over the universe with at least three
// contingent elements (one agenda per set partition of the worlds into at
// least three blocks).
std::vector<Agenda> enumerate_algebra_agendas(int universe_size);

struct VerificationRun {
  int universe_size = 0;
  int max_pairs = 0;
  std::size_t agendas_checked = 0;
  std::map<std::string, std::size_t> check_counts;
  std::vector<std::string> failures;  // replayable witness descriptions
  double seconds = 0;

  bool ok() const { return failures.empty(); }
};

// Runs every lemma-level property over the enumerated agendas: EN <=> PN,
// PC => NS, blocked <=> no median point, the even-negation closure of
// non-EN agendas, the M-set clauses for non-NC agendas, the MIS-vs-direct
// entailment equivalence, and the contrapositive of every direct edge.
VerificationRun verify_lemmas(int universe_size, int max_pairs, bool parallel = true);

// Every non-trivial algebra's contingent part is path-connected and
// even-negatable.
VerificationRun verify_algebra_lemma(int universe_size);

// Failure strings for a single agenda; empty when all checks pass.  The
// counts map is extended with per-check instance counts.
std::vector<std::string> check_agenda_lemmas(const Agenda& a,
                                             std::map<std::string, std::size_t>* counts = nullptr);

}  // namespace bba
