#include "bba/entailment.hpp"

#include <algorithm>
#include <queue>

namespace bba {

std::optional<IssueSel> conditionally_entails(const Agenda& a, std::size_t ia,
                                              std::size_t ib, const MisFamily& mis) {
  if (ia >= a.size() || ib >= a.size())
    throw Error(Errc::IssueNotInAgenda, "issue index out of range");
  if (ib == a.complement_of(ia)) return std::nullopt;
  const IssueSel need = (IssueSel{1} << ia) | (IssueSel{1} << a.complement_of(ib));
  for (IssueSel s : mis.sets)
    if ((s & need) == need) return s & ~need;
  return std::nullopt;
}

std::optional<IssueSel> conditionally_entails_direct(const Agenda& a, std::size_t ia,
                                                     std::size_t ib,
                                                     std::size_t issue_cap) {
  if (ia >= a.size() || ib >= a.size())
    throw Error(Errc::IssueNotInAgenda, "issue index out of range");
  if (a.size() > issue_cap)
    throw Error(Errc::LimitExceeded, "agenda too large for the direct oracle");
  const IssueSel sel_a = IssueSel{1} << ia;
  const IssueSel sel_nb = IssueSel{1} << a.complement_of(ib);
  const WorldSet b = a.issues[ib];
  std::optional<IssueSel> best;
  const std::uint64_t total = std::uint64_t{1} << a.size();
  for (std::uint64_t ym = 0; ym < total; ++ym) {
    const IssueSel y = static_cast<IssueSel>(ym);
    if (!is_consistent(a, y | sel_a)) continue;
    if (!is_consistent(a, y | sel_nb)) continue;
    if (!entails(a, y | sel_a, b)) continue;
    if (!best || popcount(y) < popcount(*best) ||
        (popcount(y) == popcount(*best) && y < *best))
      best = y;
  }
  return best;
}

std::vector<IssueSel> transitive_closure(const std::vector<IssueSel>& direct) {
  std::vector<IssueSel> reach = direct;
  const std::size_t n = direct.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i] >> k & 1) reach[i] |= reach[k];
  return reach;
}

EntailmentGraph entailment_graph(const Agenda& a, const MisFamily& mis) {
  EntailmentGraph g;
  g.n = a.size();
  g.direct.assign(g.n, 0);
  g.witness.assign(g.n, std::vector<IssueSel>(g.n, 0));
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j)
      if (auto w = conditionally_entails(a, i, j, mis)) {
        g.direct[i] |= IssueSel{1} << j;
        g.witness[i][j] = *w;
      }
  g.closure = transitive_closure(g.direct);
  return g;
}

std::optional<std::vector<PathHop>> path_witness(const EntailmentGraph& g,
                                                 std::size_t from, std::size_t to) {
  if (from == to) {
    if (!g.has_direct(from, from)) return std::nullopt;
    return std::vector<PathHop>{{from, g.witness[from][from]}};
  }
  if (!g.reaches(from, to)) return std::nullopt;
  std::vector<int> prev(g.n, -1);
  std::vector<bool> seen(g.n, false);
  std::queue<std::size_t> q;
  seen[from] = true;
  q.push(from);
  while (!q.empty()) {
    std::size_t cur = q.front();
    q.pop();
    if (cur == to) break;
    for (std::size_t j = 0; j < g.n; ++j) {
      if (j == cur || !g.has_direct(cur, j) || seen[j]) continue;
      seen[j] = true;
      prev[j] = static_cast<int>(cur);
      q.push(j);
    }
  }
  if (!seen[to]) return std::nullopt;  // unreachable without the self-loop
  std::vector<PathHop> hops;
  for (std::size_t cur = to; cur != from; cur = static_cast<std::size_t>(prev[cur]))
    hops.push_back({cur, g.witness[static_cast<std::size_t>(prev[cur])][cur]});
  std::reverse(hops.begin(), hops.end());
  return hops;
}

}  // namespace bba
