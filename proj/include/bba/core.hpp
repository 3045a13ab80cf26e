#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bba/types.hpp"

namespace bba {

// A complement-closed, duplicate-free family of contingent world subsets.
// Issue order is the construction order (closure-added complements follow
// their base issues); complement indices are precomputed.
struct Agenda {
  Universe universe;
  std::vector<WorldSet> issues;
  std::vector<std::string> names;        // one per issue, possibly auto-generated
  std::vector<std::size_t> complements;  // complements[i] = index of ~issues[i]

  std::size_t size() const { return issues.size(); }
  WorldSet full() const { return universe.full(); }
  std::size_t complement_of(std::size_t i) const { return complements[i]; }

  std::optional<std::size_t> index_of(WorldSet members) const {
    for (std::size_t i = 0; i < issues.size(); ++i)
      if (issues[i] == members) return i;
    return std::nullopt;
  }

  std::optional<std::size_t> index_of_name(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    return std::nullopt;
  }

  std::string issue_name(std::size_t i) const { return names[i]; }
};

Agenda make_agenda(const Universe& u, const std::vector<WorldSet>& member_sets,
                   bool auto_close,
                   const std::vector<std::string>& names = {});

// Intersection of the selected issues; empty selection yields the full
// universe.
WorldSet intersection(const Agenda& a, IssueSel sel);

bool is_consistent(const Agenda& a, IssueSel sel);

// intersection(sel) included in b.
bool entails(const Agenda& a, IssueSel sel, WorldSet b);

// Algebra operations accept the empty set and W as members (they model the
// pre-contingency setting); everything else in this library does not.
bool is_nontrivial_algebra(const Universe& u, const std::vector<WorldSet>& member_sets);

// Smallest complement- and intersection-closed family containing the input,
// the empty set, and W; sorted by bit pattern.
std::vector<WorldSet> algebra_closure(const Universe& u, const std::vector<WorldSet>& member_sets);

std::string world_set_to_string(const Universe& u, WorldSet s);
std::string selection_to_string(const Agenda& a, IssueSel sel);

}  // namespace bba
