#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bba/classifier.hpp"
#include "bba/oracle.hpp"
#include "fixtures.hpp"

using namespace bba;
using namespace fixtures;

TEST_CASE("fixture verdicts") {
  ClassificationReport pair = classify(pair_agenda());
  CHECK_FALSE(pair.oligarchy_applies);
  CHECK_FALSE(pair.triviality_applies);
  CHECK_FALSE(pair.impossibility_applies);

  ClassificationReport conj = classify(conj_agenda());
  CHECK_FALSE(conj.oligarchy_applies);
  CHECK_FALSE(conj.triviality_applies);
  CHECK_FALSE(conj.impossibility_applies);
  CHECK(conj.flags.median_points == 0b0001);

  ClassificationReport bic = classify(bicond_agenda());
  CHECK_FALSE(bic.oligarchy_applies);  // PC but not EN
  CHECK(bic.triviality_applies);
  CHECK(bic.impossibility_applies);

  ClassificationReport alg = classify(alg3_agenda());
  CHECK(alg.oligarchy_applies);
  CHECK(alg.triviality_applies);
  CHECK(alg.impossibility_applies);
}

TEST_CASE("verdict monotonicity over small agendas") {
  // NC implies blocked; PC+EN implies blocked (row 1 implies row 3).
  for (const Agenda& a : enumerate_agendas(3, 3)) {
    ClassificationReport rep = classify(a);
    if (rep.triviality_applies) CHECK(rep.impossibility_applies);
    if (rep.oligarchy_applies) CHECK(rep.impossibility_applies);
    CHECK(rep.oligarchy_applies == (rep.flags.path_connected && rep.flags.even_negatable));
    CHECK(rep.triviality_applies == rep.flags.negation_connected);
    CHECK(rep.impossibility_applies == rep.flags.blocked);
  }
}

TEST_CASE("flags are invariant under issue reordering") {
  std::mt19937 rng(5);
  for (Agenda base : {conj_agenda(), bicond_agenda(), alg3_agenda()}) {
    ClassificationReport before = classify(base);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::size_t> perm(base.size());
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::shuffle(perm.begin(), perm.end(), rng);

      std::vector<WorldSet> members;
      std::vector<std::string> names;
      for (std::size_t i : perm) {
        members.push_back(base.issues[i]);
        names.push_back(base.names[i]);
      }
      Agenda shuffled = make_agenda(base.universe, members, false, names);
      ClassificationReport after = classify(shuffled);
      CHECK(after.flags.path_connected == before.flags.path_connected);
      CHECK(after.flags.even_negatable == before.flags.even_negatable);
      CHECK(after.flags.negation_connected == before.flags.negation_connected);
      CHECK(after.flags.blocked == before.flags.blocked);
      CHECK(after.flags.median_points == before.flags.median_points);
      CHECK(popcount(after.flags.h0) == popcount(before.flags.h0));
    }
  }
}
