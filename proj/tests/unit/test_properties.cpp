#include <doctest.h>

#include "bba/properties.hpp"
#include "fixtures.hpp"

using namespace bba;
using namespace fixtures;

namespace {

PropertyFlags flags_of(const Agenda& a) {
  MisFamily mis = minimally_inconsistent_subsets(a);
  return compute_flags(a, mis, entailment_graph(a, mis));
}

}  // namespace

TEST_CASE("fixture property flags") {
  PropertyFlags pair = flags_of(pair_agenda());
  CHECK_FALSE(pair.non_simple);
  CHECK_FALSE(pair.even_negatable);
  CHECK_FALSE(pair.path_connected);
  CHECK_FALSE(pair.negation_connected);
  CHECK_FALSE(pair.blocked);
  CHECK(pair.median_points == 0b11);  // both worlds

  PropertyFlags conj = flags_of(conj_agenda());
  CHECK(conj.non_simple);
  CHECK(conj.even_negatable);
  CHECK_FALSE(conj.path_connected);
  CHECK_FALSE(conj.negation_connected);
  CHECK_FALSE(conj.blocked);
  CHECK(conj.median_points == 0b0001);  // w00 only

  PropertyFlags bic = flags_of(bicond_agenda());
  CHECK(bic.non_simple);
  CHECK_FALSE(bic.even_negatable);
  CHECK(bic.path_connected);
  CHECK(bic.negation_connected);
  CHECK(bic.blocked);
  CHECK(bic.median_points == 0);

  PropertyFlags alg = flags_of(alg3_agenda());
  CHECK(alg.non_simple);
  CHECK(alg.even_negatable);
  CHECK(alg.path_connected);
  CHECK(alg.negation_connected);
  CHECK(alg.blocked);
  CHECK(alg.median_points == 0);
}

TEST_CASE("even-negation witnesses") {
  Agenda alg = alg3_agenda();
  MisFamily mis = minimally_inconsistent_subsets(alg);
  auto w = is_even_negatable(alg, mis);
  REQUIRE(w);
  CHECK(popcount(w->z) % 2 == 0);
  CHECK(popcount(w->z) >= 2);
  CHECK(is_consistent(alg, negate_subset(alg, w->y, w->z)));

  Agenda conj = conj_agenda();
  MisFamily cm = minimally_inconsistent_subsets(conj);
  auto pw = is_pair_negatable(conj, cm);
  REQUIRE(pw);
  CHECK(popcount(pw->z) == 2);
  CHECK(is_consistent(conj, negate_subset(conj, pw->y, pw->z)));

  Agenda bic = bicond_agenda();
  CHECK_FALSE(is_even_negatable(bic, minimally_inconsistent_subsets(bic)));
  Agenda pair = pair_agenda();
  CHECK_FALSE(is_even_negatable(pair, minimally_inconsistent_subsets(pair)));
}

TEST_CASE("non-simplicity witnesses") {
  Agenda conj = conj_agenda();
  auto w = is_non_simple(minimally_inconsistent_subsets(conj));
  REQUIRE(w);
  CHECK(*w == sel(conj, {"p", "q", "~c"}));
  CHECK_FALSE(is_non_simple(minimally_inconsistent_subsets(pair_agenda())));
  CHECK_FALSE(is_non_simple(minimally_inconsistent_subsets(simple4_agenda())));
}

TEST_CASE("H0 sets") {
  Agenda conj = conj_agenda();
  MisFamily cm = minimally_inconsistent_subsets(conj);
  CHECK(h0_set(conj, entailment_graph(conj, cm)) == 0);

  Agenda bic = bicond_agenda();
  MisFamily bm = minimally_inconsistent_subsets(bic);
  CHECK(h0_set(bic, entailment_graph(bic, bm)) == (IssueSel{1} << 6) - 1);
}

TEST_CASE("find_m_set") {
  Agenda conj = conj_agenda();
  MisFamily cm = minimally_inconsistent_subsets(conj);
  EntailmentGraph cg = entailment_graph(conj, cm);
  auto m = find_m_set(conj, cg, cm);
  REQUIRE(m);
  for (IssueSel y : cm.sets) CHECK(popcount(y & *m) <= 1);
  for (std::size_t i = 0; i < conj.size(); ++i)
    CHECK(((*m >> i & 1) != (*m >> conj.complement_of(i) & 1)));

  Agenda s4 = simple4_agenda();
  MisFamily sm = minimally_inconsistent_subsets(s4);
  auto m4 = find_m_set(s4, entailment_graph(s4, sm), sm);
  REQUIRE(m4);
  CHECK(popcount(*m4) == 2);

  Agenda bic = bicond_agenda();
  MisFamily bm = minimally_inconsistent_subsets(bic);
  std::string reason;
  CHECK_FALSE(find_m_set(bic, entailment_graph(bic, bm), bm, &reason));
  CHECK(reason == "agenda is negation-connected");
}

TEST_CASE("partition into path-connected subagendas") {
  for (Agenda a : {alg3_agenda(), bicond_agenda()}) {
    MisFamily mis = minimally_inconsistent_subsets(a);
    EntailmentGraph g = entailment_graph(a, mis);
    auto part = partition_into_pc_subagendas(a, g);
    REQUIRE(part);
    CHECK(part->size() == 1);  // the agenda is already path-connected
    CHECK((*part)[0].size() == a.size());
  }

  // CONJ plus an unrelated pair over eight worlds is not negation-connected.
  Universe u = Universe::of(8);
  Agenda wide = make_agenda(u, {0b00001010, 0b00001100, 0b00001000, 0b11110000},
                            true, {"p", "q", "c", "r"});
  MisFamily wm = minimally_inconsistent_subsets(wide);
  std::string reason;
  CHECK_FALSE(partition_into_pc_subagendas(wide, entailment_graph(wide, wm), &reason));
  CHECK(reason == "agenda is not negation-connected");
}
