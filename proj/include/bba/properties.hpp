#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bba/entailment.hpp"

namespace bba {

struct EnWitness {
  IssueSel y;  // a minimally inconsistent set
  IssueSel z;  // even-sized subset whose negation makes y consistent
};

struct PropertyFlags {
  bool path_connected = false;
  bool even_negatable = false;
  bool pair_negatable = false;
  bool non_simple = false;
  bool negation_connected = false;
  bool blocked = false;
  IssueSel h0 = 0;           // issues with paths to and from their complement
  WorldSet median_points = 0;
  std::optional<EnWitness> en_witness;
  std::optional<EnWitness> pair_witness;
  std::optional<IssueSel> ns_witness;  // a MIS of size >= 3
};

bool is_path_connected(const EntailmentGraph& g);
bool is_negation_connected(const Agenda& a, const EntailmentGraph& g);
IssueSel h0_set(const Agenda& a, const EntailmentGraph& g);
bool is_blocked(const Agenda& a, const EntailmentGraph& g);

// Search order: MIS by family order, Z by size (pairs first) then bit
// pattern.
std::optional<EnWitness> is_even_negatable(const Agenda& a, const MisFamily& mis);
std::optional<EnWitness> is_pair_negatable(const Agenda& a, const MisFamily& mis);
std::optional<IssueSel> is_non_simple(const MisFamily& mis);

WorldSet median_points(const Agenda& a, const MisFamily& mis);

PropertyFlags compute_flags(const Agenda& a, const MisFamily& mis,
                            const EntailmentGraph& g);

// A set M picking one side of each complement pair outside H0 and nothing
// from H0, meeting every MIS in at most one issue (zero when the MIS meets
// H0).  Absent with a reason when the agenda is negation-connected.
std::optional<IssueSel> find_m_set(const Agenda& a, const EntailmentGraph& g,
                                   const MisFamily& mis, std::string* reason = nullptr,
                                   int pair_cap = 16);

// Partition of the issue indices into complement-closed blocks, each
// path-connected as an agenda of its own.  Absent with a reason when the
// agenda is not negation-connected or no partition is found.
std::optional<std::vector<std::vector<std::size_t>>> partition_into_pc_subagendas(
    const Agenda& a, const EntailmentGraph& g, std::string* reason = nullptr);

}  // namespace bba
