#pragma once

#include <vector>

#include "bba/core.hpp"

namespace bba {

// All minimally inconsistent subsets of an agenda, sorted by size then by
// selection bit pattern.
struct MisFamily {
  std::vector<IssueSel> sets;

  bool contains_pair(std::size_t i, std::size_t j) const {
    const IssueSel need = (IssueSel{1} << i) | (IssueSel{1} << j);
    for (IssueSel s : sets)
      if ((s & need) == need) return true;
    return false;
  }
};

inline constexpr std::size_t kDefaultMisIssueCap = 20;

bool is_minimally_inconsistent(const Agenda& a, IssueSel sel);

// Exhaustive scan over all subsets.  max_size < 0 means unbounded.  The
// parallel version splits the subset range across OpenMP threads and merges
// deterministically; the serial version is the reference kept for testing.
MisFamily minimally_inconsistent_subsets(const Agenda& a, int max_size = -1,
                                         std::size_t issue_cap = kDefaultMisIssueCap);
MisFamily minimally_inconsistent_subsets_serial(const Agenda& a, int max_size = -1,
                                                std::size_t issue_cap = kDefaultMisIssueCap);

// (y \ z) with every member of z replaced by its complement.
IssueSel negate_subset(const Agenda& a, IssueSel y, IssueSel z);

}  // namespace bba
