#include "bba/oracle.hpp"

#include <algorithm>
#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bba {

std::vector<Agenda> enumerate_agendas(int universe_size, int max_pairs) {
  Universe u = Universe::of(universe_size);
  const WorldSet full = u.full();
  std::vector<WorldSet> reps;  // one representative per complement pair
  for (WorldSet s = 1; s < full; ++s)
    if (s < (full & ~s)) reps.push_back(s);
  if (reps.size() > 20)
    throw Error(Errc::LimitExceeded, "too many complement pairs to enumerate");

  std::vector<Agenda> out;
  const std::uint64_t total = std::uint64_t{1} << reps.size();
  for (std::uint64_t pick = 1; pick < total; ++pick) {
    if (popcount(static_cast<std::uint32_t>(pick)) > max_pairs) continue;
    std::vector<WorldSet> sets;
    for (std::size_t t = 0; t < reps.size(); ++t)
      if (pick >> t & 1) sets.push_back(reps[t]);
    out.push_back(make_agenda(u, sets, true));
  }
  return out;
}

std::vector<Agenda> enumerate_algebra_agendas(int universe_size) {
  Universe u = Universe::of(universe_size);
  const int n = universe_size;
  std::vector<Agenda> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  while (true) {
    int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (nblocks >= 3) {
      std::vector<WorldSet> blocks(static_cast<std::size_t>(nblocks), 0);
      for (int w = 0; w < n; ++w)
        blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(w)])] |= WorldSet{1} << w;
      // The algebra is the set of unions of blocks; keep the contingent part.
      std::vector<WorldSet> sets;
      for (std::uint32_t pick = 1; pick + 1 < (std::uint32_t{1} << nblocks); ++pick) {
        WorldSet s = 0;
        for (int b = 0; b < nblocks; ++b)
          if (pick >> b & 1) s |= blocks[static_cast<std::size_t>(b)];
        sets.push_back(s);
      }
      out.push_back(make_agenda(u, sets, true));
    }
    // next restricted growth string
    bool advanced = false;
    for (std::size_t i = rgs.size(); i-- > 1;) {
      int maxprev = 0;
      for (std::size_t t = 0; t < i; ++t) maxprev = std::max(maxprev, rgs[t]);
      if (rgs[i] <= maxprev) {
        ++rgs[i];
        std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

namespace {

void bump(std::map<std::string, std::size_t>* counts, const std::string& key,
          std::size_t by = 1) {
  if (counts) (*counts)[key] += by;
}

std::string describe(const Agenda& a) {
  std::string s = "agenda[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += " ";
    s += world_set_to_string(a.universe, a.issues[i]);
  }
  return s + "]";
}

}  // namespace

std::vector<std::string> check_agenda_lemmas(const Agenda& a,
                                             std::map<std::string, std::size_t>* counts) {
  std::vector<std::string> failures;
  auto fail = [&](const std::string& what) { failures.push_back(describe(a) + ": " + what); };

  const MisFamily mis = minimally_inconsistent_subsets_serial(a);
  const EntailmentGraph g = entailment_graph(a, mis);
  const PropertyFlags f = compute_flags(a, mis, g);

  // MIS family sanity: every member minimal, brute-force equality.
  bump(counts, "mis-definition");
  for (IssueSel y : mis.sets)
    if (!is_minimally_inconsistent(a, y)) fail("MIS family member fails minimality");

  // MIS-based conditional entailment vs the direct-definition oracle.
  bump(counts, "entailment-oracle-equivalence");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      bool via_mis = conditionally_entails(a, i, j, mis).has_value();
      bool via_def = conditionally_entails_direct(a, i, j).has_value();
      if (via_mis != via_def)
        fail("entailment mismatch on (" + a.names[i] + "," + a.names[j] + ")");
    }

  // Contrapositive of every direct edge, with the same witness.
  bump(counts, "edge-contrapositive");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!g.has_direct(i, j)) continue;
      IssueSel y = g.witness[i][j];
      std::size_t ci = a.complement_of(i), cj = a.complement_of(j);
      bool ok = is_consistent(a, y | (IssueSel{1} << cj)) &&
                is_consistent(a, y | (IssueSel{1} << i)) &&
                entails(a, y | (IssueSel{1} << cj), a.issues[ci]);
      if (!ok) fail("contrapositive fails on (" + a.names[i] + "," + a.names[j] + ")");
    }

  // Lemma 3(1): even-negatable iff pair-negatable.
  bump(counts, "lemma3-1");
  if (f.even_negatable != f.pair_negatable) fail("EN and pair-negatable disagree");

  // Lemma 3(2): path-connected implies non-simple.
  bump(counts, "lemma3-2");
  if (f.path_connected && !f.non_simple) fail("PC without NS");

  // Lemma 6: blocked iff no median point.
  bump(counts, "lemma6");
  if (f.blocked != (f.median_points == 0)) fail("blocked/median-point mismatch");

  // PC => NC => blocked; NC iff H0 is the whole agenda.
  bump(counts, "condition-chain");
  const IssueSel all = a.size() == 32 ? ~IssueSel{0} : (IssueSel{1} << a.size()) - 1;
  if (f.path_connected && !f.negation_connected) fail("PC without NC");
  if (f.negation_connected && !f.blocked) fail("NC without blocked");
  if (f.negation_connected != (f.h0 == all)) fail("NC does not match H0 = agenda");

  // Lemma 4(2): on non-EN agendas every even negation of a MIS is again
  // minimally inconsistent.
  if (!f.even_negatable) {
    bump(counts, "lemma4-2");
    for (IssueSel y : mis.sets) {
      for (IssueSel z = y;; z = (z - 1) & y) {
        if (popcount(z) % 2 == 0 && z != 0 &&
            !is_minimally_inconsistent(a, negate_subset(a, y, z)))
          fail("even negation of a MIS is not minimally inconsistent");
        if (z == 0) break;
      }
    }
  }

  // Lemma 5: M-set exists for non-NC agendas and satisfies all clauses.
  if (!f.negation_connected) {
    bump(counts, "lemma5");
    std::string reason;
    auto m = find_m_set(a, g, mis, &reason);
    if (!m) {
      fail("M-set search failed: " + reason);
    } else {
      if (*m == 0) fail("M-set is empty");
      if ((*m & f.h0) != 0) fail("M-set meets H0");
      for (IssueSel y : mis.sets) {
        int hits = popcount(y & *m);
        if (hits > 1) fail("M-set meets a MIS twice");
        if ((y & f.h0) != 0 && hits != 0) fail("M-set meets a MIS intersecting H0");
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.h0 >> i & 1) continue;
        bool in_m = *m >> i & 1;
        bool comp_in_m = *m >> a.complement_of(i) & 1;
        if (in_m == comp_in_m) fail("M-set does not pick exactly one side of a pair");
      }
    }
  }

  return failures;
}

static VerificationRun run_over(std::vector<Agenda> agendas, bool parallel,
                                int universe_size, int max_pairs) {
  VerificationRun run;
  run.universe_size = universe_size;
  run.max_pairs = max_pairs;
  run.agendas_checked = agendas.size();
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<std::vector<std::string>> failures(agendas.size());
  std::vector<std::map<std::string, std::size_t>> counts(agendas.size());
#ifdef _OPENMP
  #pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (std::int64_t iv = 0; iv < static_cast<std::int64_t>(agendas.size()); ++iv) {
    std::size_t i = static_cast<std::size_t>(iv);
    failures[i] = check_agenda_lemmas(agendas[i], &counts[i]);
  }
  for (std::size_t i = 0; i < agendas.size(); ++i) {
    run.failures.insert(run.failures.end(), failures[i].begin(), failures[i].end());
    for (const auto& [k, v] : counts[i]) run.check_counts[k] += v;
  }
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run;
}

VerificationRun verify_lemmas(int universe_size, int max_pairs, bool parallel) {
  return run_over(enumerate_agendas(universe_size, max_pairs), parallel, universe_size,
                  max_pairs);
}

VerificationRun verify_algebra_lemma(int universe_size) {
  VerificationRun run;
  run.universe_size = universe_size;
  const auto t0 = std::chrono::steady_clock::now();
  for (const Agenda& a : enumerate_algebra_agendas(universe_size)) {
    ++run.agendas_checked;
    run.check_counts["lemma1"] += 1;
    MisFamily mis = minimally_inconsistent_subsets_serial(a);
    EntailmentGraph g = entailment_graph(a, mis);
    if (!is_path_connected(g))
      run.failures.push_back(describe(a) + ": algebra contingent part not PC");
    if (!is_even_negatable(a, mis))
      run.failures.push_back(describe(a) + ": algebra contingent part not EN");
  }
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run;
}

}  // namespace bba
