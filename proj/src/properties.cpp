#include "bba/properties.hpp"

#include <algorithm>
#include <map>

namespace bba {

bool is_path_connected(const EntailmentGraph& g) {
  const IssueSel all = g.n == 32 ? ~IssueSel{0} : (IssueSel{1} << g.n) - 1;
  for (std::size_t i = 0; i < g.n; ++i)
    if ((g.closure[i] & all) != all) return false;
  return true;
}

IssueSel h0_set(const Agenda& a, const EntailmentGraph& g) {
  IssueSel h0 = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t c = a.complement_of(i);
    if (g.reaches(i, c) && g.reaches(c, i)) h0 |= IssueSel{1} << i;
  }
  return h0;
}

bool is_negation_connected(const Agenda& a, const EntailmentGraph& g) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!g.reaches(i, a.complement_of(i))) return false;
  return true;
}

bool is_blocked(const Agenda& a, const EntailmentGraph& g) {
  return h0_set(a, g) != 0;
}

static std::vector<IssueSel> even_submasks(IssueSel y, int exact_size) {
  std::vector<IssueSel> out;
  IssueSel s = y;
  while (true) {
    if (popcount(s) == exact_size) out.push_back(s);
    if (s == 0) break;
    s = (s - 1) & y;
  }
  std::sort(out.begin(), out.end());
  return out;
}

static std::optional<EnWitness> negation_search(const Agenda& a, const MisFamily& mis,
                                                int only_size) {
  for (IssueSel y : mis.sets) {
    const int k = popcount(y);
    for (int zs = 2; zs <= k; zs += 2) {
      if (only_size > 0 && zs != only_size) continue;
      for (IssueSel z : even_submasks(y, zs))
        if (is_consistent(a, negate_subset(a, y, z))) return EnWitness{y, z};
    }
  }
  return std::nullopt;
}

std::optional<EnWitness> is_even_negatable(const Agenda& a, const MisFamily& mis) {
  return negation_search(a, mis, 0);
}

std::optional<EnWitness> is_pair_negatable(const Agenda& a, const MisFamily& mis) {
  return negation_search(a, mis, 2);
}

std::optional<IssueSel> is_non_simple(const MisFamily& mis) {
  for (IssueSel y : mis.sets)
    if (popcount(y) >= 3) return y;
  return std::nullopt;
}

WorldSet median_points(const Agenda& a, const MisFamily& mis) {
  WorldSet out = 0;
  for (int w = 0; w < a.universe.size; ++w) {
    bool ok = true;
    for (IssueSel y : mis.sets) {
      int hits = 0;
      for (IssueSel m = y; m; m &= m - 1)
        if (a.issues[static_cast<std::size_t>(lowest_bit(m))] >> w & 1) ++hits;
      if (hits > 1) {
        ok = false;
        break;
      }
    }
    if (ok) out |= WorldSet{1} << w;
  }
  return out;
}

PropertyFlags compute_flags(const Agenda& a, const MisFamily& mis,
                            const EntailmentGraph& g) {
  PropertyFlags f;
  f.path_connected = is_path_connected(g);
  f.en_witness = is_even_negatable(a, mis);
  f.even_negatable = f.en_witness.has_value();
  f.pair_witness = is_pair_negatable(a, mis);
  f.pair_negatable = f.pair_witness.has_value();
  f.ns_witness = is_non_simple(mis);
  f.non_simple = f.ns_witness.has_value();
  f.negation_connected = is_negation_connected(a, g);
  f.h0 = h0_set(a, g);
  f.blocked = f.h0 != 0;
  f.median_points = median_points(a, mis);
  return f;
}

std::optional<IssueSel> find_m_set(const Agenda& a, const EntailmentGraph& g,
                                   const MisFamily& mis, std::string* reason,
                                   int pair_cap) {
  const IssueSel h0 = h0_set(a, g);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t c = a.complement_of(i);
    if (i < c && !(h0 >> i & 1)) pairs.push_back({i, c});
  }
  if (pairs.empty()) {
    if (reason) *reason = "agenda is negation-connected";
    return std::nullopt;
  }
  if (static_cast<int>(pairs.size()) > pair_cap)
    throw Error(Errc::LimitExceeded, "too many complement pairs for the M-set search");

  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t pick = 0; pick < total; ++pick) {
    IssueSel m = 0;
    for (std::size_t t = 0; t < pairs.size(); ++t)
      m |= IssueSel{1} << (pick >> t & 1 ? pairs[t].second : pairs[t].first);
    bool ok = true;
    for (IssueSel y : mis.sets) {
      int hits = popcount(y & m);
      if (hits > 1 || (hits > 0 && (y & h0) != 0)) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
  }
  if (reason) *reason = "no M-set found within the search space";
  return std::nullopt;
}

std::optional<std::vector<std::vector<std::size_t>>> partition_into_pc_subagendas(
    const Agenda& a, const EntailmentGraph& g, std::string* reason) {
  if (!is_negation_connected(a, g)) {
    if (reason) *reason = "agenda is not negation-connected";
    return std::nullopt;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (i < a.complement_of(i)) pairs.push_back({i, a.complement_of(i)});
  const std::size_t np = pairs.size();

  std::map<IssueSel, bool> pc_cache;
  auto block_is_pc = [&](IssueSel pair_mask) {
    auto it = pc_cache.find(pair_mask);
    if (it != pc_cache.end()) return it->second;
    std::vector<WorldSet> sets;
    std::vector<std::string> names;
    for (std::size_t t = 0; t < np; ++t)
      if (pair_mask >> t & 1) {
        sets.push_back(a.issues[pairs[t].first]);
        names.push_back(a.names[pairs[t].first]);
        sets.push_back(a.issues[pairs[t].second]);
        names.push_back(a.names[pairs[t].second]);
      }
    Agenda sub = make_agenda(a.universe, sets, false, names);
    MisFamily mis = minimally_inconsistent_subsets(sub);
    bool pc = is_path_connected(entailment_graph(sub, mis));
    pc_cache[pair_mask] = pc;
    return pc;
  };

  if (np == 0) {
    if (reason) *reason = "empty agenda";
    return std::nullopt;
  }

  auto next_rgs = [](std::vector<int>& r) {
    for (std::size_t i = r.size(); i-- > 1;) {
      int maxprev = 0;
      for (std::size_t t = 0; t < i; ++t) maxprev = std::max(maxprev, r[t]);
      if (r[i] <= maxprev) {
        ++r[i];
        std::fill(r.begin() + static_cast<std::ptrdiff_t>(i) + 1, r.end(), 0);
        return true;
      }
    }
    return false;
  };

  // Restricted-growth-string enumeration of partitions of the pair set; the
  // all-in-one-block partition comes first.
  std::vector<int> rgs(np, 0);
  while (true) {
    int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<IssueSel> blocks(static_cast<std::size_t>(nblocks), 0);
    for (std::size_t t = 0; t < np; ++t)
      blocks[static_cast<std::size_t>(rgs[t])] |= IssueSel{1} << t;
    bool all_pc = true;
    for (IssueSel b : blocks)
      if (!block_is_pc(b)) {
        all_pc = false;
        break;
      }
    if (all_pc) {
      std::vector<std::vector<std::size_t>> out;
      for (IssueSel b : blocks) {
        std::vector<std::size_t> idx;
        for (std::size_t t = 0; t < np; ++t)
          if (b >> t & 1) {
            idx.push_back(pairs[t].first);
            idx.push_back(pairs[t].second);
          }
        out.push_back(idx);
      }
      return out;
    }
    if (!next_rgs(rgs)) {
      if (reason) *reason = "no path-connected partition found";
      return std::nullopt;
    }
  }
}

}  // namespace bba
