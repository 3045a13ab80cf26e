#include "bba/mis.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bba {

bool is_minimally_inconsistent(const Agenda& a, IssueSel sel) {
  if (sel == 0) return false;
  if (intersection(a, sel) != 0) return false;
  for (IssueSel m = sel; m; m &= m - 1) {
    IssueSel without = sel & ~(m & -m);
    if (intersection(a, without) == 0) return false;
  }
  return true;
}

static bool mis_candidate(const Agenda& a, IssueSel sel, int max_size) {
  if (max_size >= 0 && popcount(sel) > max_size) return false;
  return is_minimally_inconsistent(a, sel);
}

static void sort_family(std::vector<IssueSel>& sets) {
  std::sort(sets.begin(), sets.end(), [](IssueSel x, IssueSel y) {
    int px = popcount(x), py = popcount(y);
    return px != py ? px < py : x < y;
  });
}

static void check_cap(const Agenda& a, std::size_t issue_cap) {
  if (a.size() > issue_cap)
    throw Error(Errc::LimitExceeded,
                "agenda has " + std::to_string(a.size()) +
                    " issues, exhaustive scan capped at " + std::to_string(issue_cap));
}

MisFamily minimally_inconsistent_subsets_serial(const Agenda& a, int max_size,
                                                std::size_t issue_cap) {
  check_cap(a, issue_cap);
  const std::uint64_t total = std::uint64_t{1} << a.size();
  MisFamily fam;
  for (std::uint64_t sel = 1; sel < total; ++sel)
    if (mis_candidate(a, static_cast<IssueSel>(sel), max_size))
      fam.sets.push_back(static_cast<IssueSel>(sel));
  sort_family(fam.sets);
  return fam;
}

MisFamily minimally_inconsistent_subsets(const Agenda& a, int max_size,
                                         std::size_t issue_cap) {
  check_cap(a, issue_cap);
  const std::int64_t total = std::int64_t{1} << a.size();
  MisFamily fam;
#ifdef _OPENMP
  #pragma omp parallel
  {
    std::vector<IssueSel> local;
    #pragma omp for schedule(static) nowait
    for (std::int64_t sel = 1; sel < total; ++sel)
      if (mis_candidate(a, static_cast<IssueSel>(sel), max_size))
        local.push_back(static_cast<IssueSel>(sel));
    #pragma omp critical
    fam.sets.insert(fam.sets.end(), local.begin(), local.end());
  }
#else
  for (std::int64_t sel = 1; sel < total; ++sel)
    if (mis_candidate(a, static_cast<IssueSel>(sel), max_size))
      fam.sets.push_back(static_cast<IssueSel>(sel));
#endif
  sort_family(fam.sets);
  return fam;
}

IssueSel negate_subset(const Agenda& a, IssueSel y, IssueSel z) {
  if ((z & ~y) != 0)
    throw Error(Errc::NotASubset, "negation set is not a subset of the base set");
  IssueSel out = y & ~z;
  for (IssueSel m = z; m; m &= m - 1)
    out |= IssueSel{1} << a.complement_of(static_cast<std::size_t>(lowest_bit(m)));
  return out;
}

}  // namespace bba
