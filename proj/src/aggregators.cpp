#include "bba/aggregators.hpp"

#include <algorithm>
#include <cctype>

namespace bba {

AggregatorSpec AggregatorSpec::oligarchy(int n, std::uint32_t members) {
  if (members == 0 || (members & ~((n == 32 ? 0 : std::uint32_t{1} << n) - 1)) != 0)
    throw Error(Errc::BadInput, "oligarchy members must be a nonempty subset of the individuals");
  return AggregatorSpec{RuleKind::Oligarchy, n, members, Rat(1, 2), false, 0};
}

AggregatorSpec AggregatorSpec::trivial(int n) {
  return AggregatorSpec{RuleKind::Trivial, n, (std::uint32_t{1} << n) - 1, Rat(1, 2), false, 0};
}

AggregatorSpec AggregatorSpec::dictatorship(int n, int who) {
  if (who < 0 || who >= n) throw Error(Errc::BadInput, "dictator index out of range");
  return AggregatorSpec{RuleKind::Dictatorship, n, std::uint32_t{1} << who, Rat(1, 2), false, 0};
}

AggregatorSpec AggregatorSpec::with_threshold(int n, Rat t, bool strict) {
  if (t <= Rat(0) || t > Rat(1)) throw Error(Errc::BadInput, "threshold must be in (0,1]");
  return AggregatorSpec{RuleKind::Threshold, n, 0, t, strict, 0};
}

AggregatorSpec AggregatorSpec::unanimity_default(int n, IssueSel default_set) {
  return AggregatorSpec{RuleKind::UnanimityDefault, n, 0, Rat(1, 2), false, default_set};
}

BinaryBelief evaluate(const AggregatorSpec& spec, const Profile& pr, const Agenda& a) {
  if (static_cast<int>(pr.n()) != spec.n)
    throw Error(Errc::SizeMismatch, "profile size does not match the rule");
  std::uint32_t members = spec.members;
  if (spec.kind == RuleKind::Trivial)
    members = (std::uint32_t{1} << spec.n) - 1;

  BinaryBelief bel;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool accept = false;
    switch (spec.kind) {
      case RuleKind::Oligarchy:
      case RuleKind::Trivial:
      case RuleKind::Dictatorship: {
        accept = true;
        for (std::uint32_t m = members; m; m &= m - 1)
          if (prob(pr.members[static_cast<std::size_t>(lowest_bit(m))], a.issues[i]) != Rat(1)) {
            accept = false;
            break;
          }
        break;
      }
      case RuleKind::Threshold: {
        Rat sum(0);
        for (const MassFunction& p : pr.members) sum += prob(p, a.issues[i]);
        Rat mean = sum / Rat(spec.n);
        accept = spec.strict ? mean > spec.threshold : mean >= spec.threshold;
        break;
      }
      case RuleKind::UnanimityDefault: {
        bool all_zero = true, all_one = true;
        for (const MassFunction& p : pr.members) {
          Rat v = prob(p, a.issues[i]);
          if (v != Rat(0)) all_zero = false;
          if (v != Rat(1)) all_one = false;
        }
        accept = (spec.default_set >> i & 1) ? !all_zero : all_one;
        break;
      }
    }
    if (accept) bel.accepted |= IssueSel{1} << i;
  }
  return bel;
}

const char* axiom_name(Axiom ax) {
  switch (ax) {
    case Axiom::CP: return "CP";
    case Axiom::ZP: return "ZP";
    case Axiom::AN: return "AN";
    case Axiom::IND: return "IND";
    case Axiom::SYS: return "SYS";
    case Axiom::MON: return "MON";
    case Axiom::CDC: return "CDC";
    case Axiom::CCS: return "CCS";
    case Axiom::CCP: return "CCP";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(const std::string& name) {
  std::string up;
  for (char c : name) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Axiom ax : {Axiom::CP, Axiom::ZP, Axiom::AN, Axiom::IND, Axiom::SYS,
                   Axiom::MON, Axiom::CDC, Axiom::CCS, Axiom::CCP})
    if (up == axiom_name(ax)) return ax;
  return std::nullopt;
}

namespace {

bool vec_leq(const std::vector<Rat>& x, const std::vector<Rat>& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

}  // namespace

AxiomReport check_axioms(const AggregatorSpec& spec, const Agenda& a, int d,
                         const std::set<Axiom>& axioms) {
  AxiomReport rep;
  rep.n = spec.n;
  rep.d = d;

  const std::vector<Profile> profiles =
      enumerate_grid_profiles(a.universe.size, spec.n, d);
  rep.profile_count = profiles.size();
  const std::size_t np = profiles.size();
  const std::size_t ni = a.size();

  std::vector<IssueSel> out(np);
  std::vector<std::vector<std::vector<Rat>>> vecs(np);
#ifdef _OPENMP
  #pragma omp parallel for schedule(static)
#endif
  for (std::int64_t piv = 0; piv < static_cast<std::int64_t>(np); ++piv) {
    std::size_t pi = static_cast<std::size_t>(piv);
    out[pi] = evaluate(spec, profiles[pi], a).accepted;
    vecs[pi].reserve(ni);
    for (std::size_t i = 0; i < ni; ++i)
      vecs[pi].push_back(profile_vector(profiles[pi], a.issues[i]));
  }

  auto fail = [&](Axiom ax, AxiomWitness w) { rep.verdicts[ax] = {VerdictStatus::Fail, std::move(w)}; };
  auto pass = [&](Axiom ax) { rep.verdicts[ax] = {VerdictStatus::Pass, std::nullopt}; };
  auto want = [&](Axiom ax) { return axioms.count(ax) > 0; };

  if (want(Axiom::CP) || want(Axiom::ZP)) {
    std::optional<AxiomWitness> cp_w, zp_w;
    for (std::size_t pi = 0; pi < np && (!cp_w || !zp_w); ++pi)
      for (std::size_t i = 0; i < ni; ++i) {
        bool all1 = std::all_of(vecs[pi][i].begin(), vecs[pi][i].end(),
                                [](const Rat& r) { return r == Rat(1); });
        bool all0 = std::all_of(vecs[pi][i].begin(), vecs[pi][i].end(),
                                [](const Rat& r) { return r == Rat(0); });
        if (!cp_w && all1 && !(out[pi] >> i & 1))
          cp_w = AxiomWitness{profiles[pi], std::nullopt, i, std::nullopt, {}};
        if (!zp_w && all0 && (out[pi] >> i & 1))
          zp_w = AxiomWitness{profiles[pi], std::nullopt, i, std::nullopt, {}};
      }
    if (want(Axiom::CP)) cp_w ? fail(Axiom::CP, *cp_w) : pass(Axiom::CP);
    if (want(Axiom::ZP)) zp_w ? fail(Axiom::ZP, *zp_w) : pass(Axiom::ZP);
  }

  if (want(Axiom::AN)) {
    std::optional<AxiomWitness> w;
    std::vector<int> perm(static_cast<std::size_t>(spec.n));
    for (std::size_t pi = 0; pi < np && !w; ++pi) {
      for (int i = 0; i < spec.n; ++i) perm[static_cast<std::size_t>(i)] = i;
      while (std::next_permutation(perm.begin(), perm.end())) {
        Profile permuted;
        for (int i = 0; i < spec.n; ++i)
          permuted.members.push_back(profiles[pi].members[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
        if (evaluate(spec, permuted, a).accepted != out[pi]) {
          w = AxiomWitness{profiles[pi], permuted, std::nullopt, std::nullopt, perm};
          break;
        }
      }
    }
    w ? fail(Axiom::AN, *w) : pass(Axiom::AN);
  }

  if (want(Axiom::IND)) {
    std::optional<AxiomWitness> w;
    for (std::size_t i = 0; i < ni && !w; ++i) {
      std::map<std::vector<Rat>, std::pair<std::size_t, bool>> seen;
      for (std::size_t pi = 0; pi < np; ++pi) {
        bool bit = out[pi] >> i & 1;
        auto [it, inserted] = seen.insert({vecs[pi][i], {pi, bit}});
        if (!inserted && it->second.second != bit) {
          w = AxiomWitness{profiles[it->second.first], profiles[pi], i, i, {}};
          break;
        }
      }
    }
    w ? fail(Axiom::IND, *w) : pass(Axiom::IND);
  }

  if (want(Axiom::SYS)) {
    std::optional<AxiomWitness> w;
    std::map<std::vector<Rat>, std::tuple<std::size_t, std::size_t, bool>> seen;
    for (std::size_t pi = 0; pi < np && !w; ++pi)
      for (std::size_t i = 0; i < ni; ++i) {
        bool bit = out[pi] >> i & 1;
        auto [it, inserted] = seen.insert({vecs[pi][i], {pi, i, bit}});
        if (!inserted && std::get<2>(it->second) != bit) {
          w = AxiomWitness{profiles[std::get<0>(it->second)], profiles[pi],
                           std::get<1>(it->second), i, {}};
          break;
        }
      }
    w ? fail(Axiom::SYS, *w) : pass(Axiom::SYS);
  }

  if (want(Axiom::MON)) {
    std::optional<AxiomWitness> w;
    for (std::size_t i = 0; i < ni && !w; ++i) {
      // Distinct vectors with a representative accepting / rejecting profile.
      std::map<std::vector<Rat>, std::pair<std::optional<std::size_t>, std::optional<std::size_t>>> reps;
      for (std::size_t pi = 0; pi < np; ++pi) {
        auto& [one, zero] = reps[vecs[pi][i]];
        if (out[pi] >> i & 1) {
          if (!one) one = pi;
        } else if (!zero) {
          zero = pi;
        }
      }
      for (const auto& [v, rv] : reps) {
        if (!rv.first) continue;
        for (const auto& [u, ru] : reps) {
          if (!ru.second || !vec_leq(v, u)) continue;
          w = AxiomWitness{profiles[*rv.first], profiles[*ru.second], i, i, {}};
          break;
        }
        if (w) break;
      }
    }
    w ? fail(Axiom::MON, *w) : pass(Axiom::MON);
  }

  for (Axiom ax : {Axiom::CDC, Axiom::CCS, Axiom::CCP}) {
    if (!want(ax)) continue;
    std::optional<AxiomWitness> w;
    for (std::size_t pi = 0; pi < np && !w; ++pi) {
      BinaryBelief bel{out[pi]};
      std::size_t violating = 0;
      bool ok = ax == Axiom::CDC   ? is_deductively_closed(a, bel, &violating)
                : ax == Axiom::CCS ? is_consistent_belief(a, bel)
                                   : is_complete_belief(a, bel);
      if (!ok) {
        AxiomWitness aw{profiles[pi], std::nullopt, std::nullopt, std::nullopt, {}};
        if (ax == Axiom::CDC) aw.issue = violating;
        if (ax == Axiom::CCP) {
          for (std::size_t i = 0; i < ni; ++i)
            if (!(out[pi] >> i & 1) && !(out[pi] >> a.complement_of(i) & 1)) {
              aw.issue = i;
              aw.issue2 = a.complement_of(i);
              break;
            }
        }
        w = std::move(aw);
      }
    }
    w ? fail(ax, *w) : pass(ax);
  }

  return rep;
}

GTable extract_g(const AggregatorSpec& spec, const Agenda& a, int d) {
  GTable g;
  g.n = spec.n;
  g.d = d;
  const std::vector<Profile> profiles = enumerate_grid_profiles(a.universe.size, spec.n, d);
  for (const Profile& pr : profiles) {
    IssueSel out = evaluate(spec, pr, a).accepted;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::vector<Rat> v = profile_vector(pr, a.issues[i]);
      int bit = out >> i & 1;
      auto [it, inserted] = g.entries.insert({std::move(v), bit});
      if (!inserted && it->second != bit)
        throw Error(Errc::NotSystematic, "rule is not systematic on this grid");
    }
  }
  return g;
}

FactResult check_fact1(const GTable& g) {
  FactResult r;
  for (const auto& [a, ga] : g.entries) {
    if (ga != 1) continue;
    for (const auto& [b, gb] : g.entries)
      if (gb == 0 && vec_leq(a, b)) {
        r.pass = false;
        r.witness = {a, b};
        return r;
      }
  }
  return r;
}

FactResult check_fact2(const GTable& g) {
  FactResult r;
  for (const auto& [a, ga] : g.entries) {
    if (ga != 1) continue;
    for (const auto& [b, gb] : g.entries) {
      if (gb != 1) continue;
      std::vector<Rat> c(a.size());
      bool nonneg = true;
      for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = a[i] + b[i] - Rat(1);
        if (c[i] < Rat(0)) {
          nonneg = false;
          break;
        }
      }
      if (!nonneg) continue;
      auto it = g.entries.find(c);
      if (it == g.entries.end()) {
        ++r.skipped;
        continue;
      }
      if (it->second != 1) {
        r.pass = false;
        r.witness = {a, b, c};
        return r;
      }
    }
  }
  return r;
}

FactResult check_fact1pp(const GTable& g) {
  FactResult r;
  for (const auto& [a, ga] : g.entries) {
    if (ga != 1) continue;
    std::vector<Rat> bound(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      Rat v = Rat(2) * a[i] - Rat(1);
      bound[i] = v < Rat(0) ? -v : v;
    }
    for (const auto& [c, gc] : g.entries)
      if (gc == 0 && vec_leq(bound, c)) {
        r.pass = false;
        r.witness = {a, c};
        return r;
      }
  }
  return r;
}

bool table_is_oligarchic(const GTable& g) {
  const int n = g.n;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) {
    bool match = true;
    for (const auto& [v, bit] : g.entries) {
      bool all1 = true;
      for (int i = 0; i < n && all1; ++i)
        if ((m >> i & 1) && v[static_cast<std::size_t>(i)] != Rat(1)) all1 = false;
      if ((all1 ? 1 : 0) != bit) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

TableSweep sweep_systematic_tables(const Agenda& a, int n, int d,
                                   const std::set<Axiom>& required,
                                   bool monotone_only, std::size_t point_cap) {
  // Grid points: all vectors over {0, 1/d, ..., 1}^n.
  std::vector<std::vector<Rat>> points;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<Rat> v;
    for (int i : idx) v.push_back(Rat(i, d));
    points.push_back(std::move(v));
    int pos = n - 1;
    while (pos >= 0) {
      if (++idx[static_cast<std::size_t>(pos)] <= d) break;
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  if (points.size() > point_cap)
    throw Error(Errc::LimitExceeded, "grid too fine for the table sweep");

  std::map<std::vector<Rat>, std::size_t> point_index;
  for (std::size_t i = 0; i < points.size(); ++i) point_index[points[i]] = i;

  const std::vector<Profile> profiles = enumerate_grid_profiles(a.universe.size, n, d);
  // Per profile, per issue: index of the realized grid point.
  std::vector<std::vector<std::size_t>> pvec(profiles.size());
  for (std::size_t pi = 0; pi < profiles.size(); ++pi)
    for (std::size_t i = 0; i < a.size(); ++i)
      pvec[pi].push_back(point_index.at(profile_vector(profiles[pi], a.issues[i])));

  // Comparable point pairs, for the monotone filter.
  std::vector<std::pair<std::size_t, std::size_t>> leq_pairs;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j)
      if (i != j && vec_leq(points[i], points[j])) leq_pairs.push_back({i, j});

  auto make_table = [&](std::uint64_t bits) {
    GTable g;
    g.n = n;
    g.d = d;
    for (std::size_t i = 0; i < points.size(); ++i)
      g.entries[points[i]] = static_cast<int>(bits >> i & 1);
    return g;
  };

  TableSweep sweep;
  const std::uint64_t total = std::uint64_t{1} << points.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    ++sweep.tables_enumerated;
    auto bit_at = [&](std::size_t i) { return static_cast<int>(bits >> i & 1); };
    if (monotone_only) {
      bool mono = true;
      for (const auto& [lo, hi] : leq_pairs)
        if (bit_at(lo) > bit_at(hi)) {
          mono = false;
          break;
        }
      if (!mono) continue;
    }
    bool ok = true;
    for (Axiom ax : required) {
      switch (ax) {
        case Axiom::CP:
          ok = bit_at(point_index.at(std::vector<Rat>(static_cast<std::size_t>(n), Rat(1)))) == 1;
          break;
        case Axiom::ZP:
          ok = bit_at(point_index.at(std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)))) == 0;
          break;
        case Axiom::IND:
        case Axiom::SYS:
          ok = true;  // table rules are systematic by construction
          break;
        case Axiom::MON:
          ok = true;
          for (const auto& [lo, hi] : leq_pairs)
            if (bit_at(lo) > bit_at(hi)) {
              ok = false;
              break;
            }
          break;
        case Axiom::AN: {
          ok = true;
          std::vector<int> perm(static_cast<std::size_t>(n));
          for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
          while (ok && std::next_permutation(perm.begin(), perm.end()))
            for (std::size_t i = 0; i < points.size(); ++i) {
              std::vector<Rat> permuted(static_cast<std::size_t>(n));
              for (int k = 0; k < n; ++k)
                permuted[static_cast<std::size_t>(k)] =
                    points[i][static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
              if (bit_at(i) != bit_at(point_index.at(permuted))) {
                ok = false;
                break;
              }
            }
          break;
        }
        case Axiom::CDC:
        case Axiom::CCS:
        case Axiom::CCP: {
          ok = true;
          for (std::size_t pi = 0; pi < profiles.size() && ok; ++pi) {
            BinaryBelief bel;
            for (std::size_t i = 0; i < a.size(); ++i)
              if (bit_at(pvec[pi][i])) bel.accepted |= IssueSel{1} << i;
            ok = ax == Axiom::CDC   ? is_deductively_closed(a, bel)
                 : ax == Axiom::CCS ? is_consistent_belief(a, bel)
                                    : is_complete_belief(a, bel);
          }
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) continue;
    ++sweep.survivors;
    GTable g = make_table(bits);
    if (!table_is_oligarchic(g)) {
      sweep.all_survivors_oligarchic = false;
      if (!sweep.non_oligarchic) sweep.non_oligarchic = g;
    }
    sweep.surviving_tables.push_back(std::move(g));
  }
  return sweep;
}

std::optional<GTable> search_counterexample(const Agenda& a, int n, int d,
                                            const std::set<Axiom>& required,
                                            bool monotone_only) {
  return sweep_systematic_tables(a, n, d, required, monotone_only).non_oligarchic;
}

}  // namespace bba
