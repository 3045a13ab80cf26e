#pragma once

#include <optional>
#include <vector>

#include "bba/mis.hpp"

namespace bba {

// Conditional entailment between issues: a |=* b when some auxiliary issue
// set Y, consistent with a and with ~b, makes {a} together with Y entail b.
// direct[i] holds the outgoing edges of issue i as a bit row; closure is the
// transitive closure of direct.  Witnesses are stored for direct edges only.
struct EntailmentGraph {
  std::size_t n = 0;
  std::vector<IssueSel> direct;   // direct[i] >> j & 1  ==  i |=* j
  std::vector<IssueSel> closure;  // closure[i] >> j & 1 ==  i |=** j
  std::vector<std::vector<IssueSel>> witness;  // valid where direct edge set

  bool has_direct(std::size_t i, std::size_t j) const { return direct[i] >> j & 1; }
  bool reaches(std::size_t i, std::size_t j) const { return closure[i] >> j & 1; }
};

inline constexpr std::size_t kDefaultOracleIssueCap = 14;

// MIS-based decision: a |=* b iff b != ~a and some MIS contains both a and
// ~b; the witness is that MIS minus {a, ~b}.
std::optional<IssueSel> conditionally_entails(const Agenda& a, std::size_t ia,
                                              std::size_t ib, const MisFamily& mis);

// Definition-literal oracle: exhaustive search over all Y for the three
// clauses.  Kept independent of the MIS route; used to validate it.
std::optional<IssueSel> conditionally_entails_direct(const Agenda& a, std::size_t ia,
                                                     std::size_t ib,
                                                     std::size_t issue_cap = kDefaultOracleIssueCap);

EntailmentGraph entailment_graph(const Agenda& a, const MisFamily& mis);

struct PathHop {
  std::size_t issue;  // next issue on the chain
  IssueSel witness;   // Y witnessing prev |=* issue
};

// Shortest chain from |from| to |to| along direct edges, lowest-index
// tie-breaking; nullopt when unreachable.
std::optional<std::vector<PathHop>> path_witness(const EntailmentGraph& g,
                                                 std::size_t from, std::size_t to);

std::vector<IssueSel> transitive_closure(const std::vector<IssueSel>& direct);

}  // namespace bba
