#include "bba/core.hpp"

#include <algorithm>
#include <set>

namespace bba {

Agenda make_agenda(const Universe& u, const std::vector<WorldSet>& member_sets,
                   bool auto_close, const std::vector<std::string>& names) {
  const WorldSet full = u.full();
  Agenda a;
  a.universe = u;

  auto add = [&](WorldSet s, const std::string& name) {
    if (s == 0 || s == full)
      throw Error(Errc::NonContingentIssue,
                  "non-contingent issue: " + world_set_to_string(u, s));
    if ((s & ~full) != 0)
      throw Error(Errc::BadInput, "issue contains worlds outside the universe");
    if (a.index_of(s)) return;  // first occurrence wins
    if (a.issues.size() >= static_cast<std::size_t>(kMaxIssues))
      throw Error(Errc::LimitExceeded, "agenda exceeds 32 issues");
    a.issues.push_back(s);
    a.names.push_back(name.empty() ? world_set_to_string(u, s) : name);
  };

  for (std::size_t i = 0; i < member_sets.size(); ++i)
    add(member_sets[i], i < names.size() ? names[i] : "");

  // Complement closure: append missing complements after the supplied issues.
  for (std::size_t i = 0; i < a.issues.size(); ++i) {
    WorldSet comp = full & ~a.issues[i];
    if (!a.index_of(comp)) {
      if (!auto_close)
        throw Error(Errc::NotComplementClosed,
                    "missing complement of " + a.names[i]);
      const std::string& base = a.names[i];
      bool compound = base.find_first_of(" &|<->()") != std::string::npos;
      add(comp, compound ? "~(" + base + ")" : "~" + base);
    }
  }

  if (a.issues.empty()) throw Error(Errc::EmptyAgenda, "agenda is empty");

  a.complements.resize(a.issues.size());
  for (std::size_t i = 0; i < a.issues.size(); ++i)
    a.complements[i] = *a.index_of(full & ~a.issues[i]);
  return a;
}

WorldSet intersection(const Agenda& a, IssueSel sel) {
  WorldSet out = a.full();
  for (IssueSel m = sel; m; m &= m - 1) out &= a.issues[static_cast<std::size_t>(lowest_bit(m))];
  return out;
}

bool is_consistent(const Agenda& a, IssueSel sel) {
  return intersection(a, sel) != 0;
}

bool entails(const Agenda& a, IssueSel sel, WorldSet b) {
  return (intersection(a, sel) & ~b) == 0;
}

static std::set<WorldSet> closure_set(const Universe& u,
                                      const std::vector<WorldSet>& member_sets) {
  const WorldSet full = u.full();
  std::set<WorldSet> fam(member_sets.begin(), member_sets.end());
  fam.insert(0);
  fam.insert(full);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<WorldSet> cur(fam.begin(), fam.end());
    for (WorldSet s : cur)
      if (fam.insert(full & ~s).second) grew = true;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (fam.insert(cur[i] & cur[j]).second) grew = true;
  }
  return fam;
}

bool is_nontrivial_algebra(const Universe& u, const std::vector<WorldSet>& member_sets) {
  const WorldSet full = u.full();
  std::set<WorldSet> fam(member_sets.begin(), member_sets.end());
  if (!fam.count(0) || !fam.count(full)) return false;
  for (WorldSet s : fam)
    if (!fam.count(full & ~s)) return false;
  for (WorldSet s : fam)
    for (WorldSet t : fam)
      if (!fam.count(s & t)) return false;
  int contingent = 0;
  for (WorldSet s : fam)
    if (s != 0 && s != full) ++contingent;
  return contingent >= 3;
}

std::vector<WorldSet> algebra_closure(const Universe& u,
                                      const std::vector<WorldSet>& member_sets) {
  std::set<WorldSet> fam = closure_set(u, member_sets);
  return std::vector<WorldSet>(fam.begin(), fam.end());
}

std::string world_set_to_string(const Universe& u, WorldSet s) {
  std::string out = "{";
  bool first = true;
  for (int w = 0; w < u.size; ++w) {
    if (!(s >> w & 1)) continue;
    if (!first) out += ",";
    out += u.world_name(w);
    first = false;
  }
  return out + "}";
}

std::string selection_to_string(const Agenda& a, IssueSel sel) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(sel >> i & 1)) continue;
    if (!first) out += ",";
    out += a.names[i];
    first = false;
  }
  return out + "}";
}

}  // namespace bba
