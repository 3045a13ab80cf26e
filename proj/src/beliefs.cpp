#include "bba/beliefs.hpp"

namespace bba {

MassFunction MassFunction::point(int worlds, int at) {
  MassFunction p;
  p.mass.assign(static_cast<std::size_t>(worlds), Rat(0));
  p.mass[static_cast<std::size_t>(at)] = Rat(1);
  return p;
}

MassFunction MassFunction::uniform(int worlds) {
  MassFunction p;
  p.mass.assign(static_cast<std::size_t>(worlds), Rat(1, worlds));
  return p;
}

void validate_mass(const MassFunction& p, int worlds) {
  if (static_cast<int>(p.mass.size()) != worlds)
    throw Error(Errc::SizeMismatch, "mass function has wrong world count");
  Rat sum(0);
  for (const Rat& m : p.mass) {
    if (m < Rat(0)) throw Error(Errc::BadInput, "negative mass");
    sum += m;
  }
  if (sum != Rat(1)) throw Error(Errc::BadInput, "masses do not sum to 1");
}

Rat prob(const MassFunction& p, WorldSet issue) {
  Rat sum(0);
  for (WorldSet m = issue; m; m &= m - 1) {
    std::size_t w = static_cast<std::size_t>(lowest_bit(m));
    if (w < p.mass.size()) sum += p.mass[w];
  }
  return sum;
}

std::vector<Rat> profile_vector(const Profile& pr, WorldSet issue) {
  std::vector<Rat> out;
  out.reserve(pr.n());
  for (const MassFunction& p : pr.members) out.push_back(prob(p, issue));
  return out;
}

bool is_deductively_closed(const Agenda& a, const BinaryBelief& bel,
                           std::size_t* violating) {
  const WorldSet inter = intersection(a, bel.accepted);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (bel.accepted >> i & 1) continue;
    if ((inter & ~a.issues[i]) == 0) {
      if (violating) *violating = i;
      return false;
    }
  }
  return true;
}

bool is_consistent_belief(const Agenda& a, const BinaryBelief& bel) {
  return intersection(a, bel.accepted) != 0;
}

bool is_complete_belief(const Agenda& a, const BinaryBelief& bel) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t c = a.complement_of(i);
    if (!(bel.accepted >> i & 1) && !(bel.accepted >> c & 1)) return false;
  }
  return true;
}

static void compositions(int worlds, int left, std::vector<int>& cur, int d,
                         std::vector<MassFunction>& out) {
  if (static_cast<int>(cur.size()) == worlds - 1) {
    MassFunction p;
    p.mass.reserve(static_cast<std::size_t>(worlds));
    for (int c : cur) p.mass.push_back(Rat(c, d));
    p.mass.push_back(Rat(left, d));
    out.push_back(std::move(p));
    return;
  }
  for (int take = 0; take <= left; ++take) {
    cur.push_back(take);
    compositions(worlds, left - take, cur, d, out);
    cur.pop_back();
  }
}

std::vector<MassFunction> enumerate_grid_masses(int worlds, int d) {
  if (worlds < 1 || d < 1) throw Error(Errc::BadInput, "need worlds >= 1 and d >= 1");
  std::vector<MassFunction> out;
  std::vector<int> cur;
  compositions(worlds, d, cur, d, out);
  return out;
}

std::vector<Profile> enumerate_grid_profiles(int worlds, int n, int d,
                                             std::size_t cap) {
  if (n < 1) throw Error(Errc::BadInput, "need n >= 1");
  std::vector<MassFunction> masses = enumerate_grid_masses(worlds, d);
  double count = 1;
  for (int i = 0; i < n; ++i) count *= static_cast<double>(masses.size());
  if (count > static_cast<double>(cap))
    throw Error(Errc::LimitExceeded, "profile grid exceeds the enumeration cap");

  std::vector<Profile> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    Profile pr;
    pr.members.reserve(static_cast<std::size_t>(n));
    for (std::size_t i : idx) pr.members.push_back(masses[i]);
    out.push_back(std::move(pr));
    int pos = n - 1;
    while (pos >= 0) {
      if (++idx[static_cast<std::size_t>(pos)] < masses.size()) break;
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

}  // namespace bba
