#include <doctest.h>

#include <set>

#include "bba/oracle.hpp"
#include "fixtures.hpp"

using namespace bba;

TEST_CASE("agenda enumeration counts") {
  // Three worlds give three complement pairs of contingent subsets, so
  // 3 single-pair agendas and 2^3 - 1 = 7 agendas overall; four worlds give
  // seven pairs and C(7,1) + C(7,2) = 28 agendas of at most two pairs.
  CHECK(enumerate_agendas(2, 1).size() == 1);
  CHECK(enumerate_agendas(3, 1).size() == 3);
  CHECK(enumerate_agendas(3, 3).size() == 7);
  CHECK(enumerate_agendas(4, 2).size() == 28);
}

TEST_CASE("enumerated agendas are valid and distinct") {
  std::set<std::vector<WorldSet>> seen;
  for (const Agenda& a : enumerate_agendas(3, 3)) {
    CHECK(a.size() % 2 == 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a.issues[i] != 0);
      CHECK(a.issues[i] != a.full());
      CHECK(a.issues[a.complement_of(i)] == (a.full() & ~a.issues[i]));
    }
    std::vector<WorldSet> sorted = a.issues;
    std::sort(sorted.begin(), sorted.end());
    CHECK(seen.insert(sorted).second);
  }
}

TEST_CASE("algebra agenda enumeration") {
  // Partitions of 3 worlds into >=3 blocks: only the discrete partition.
  std::vector<Agenda> a3 = enumerate_algebra_agendas(3);
  REQUIRE(a3.size() == 1);
  CHECK(a3[0].size() == 6);

  // Partitions of 4 worlds into >=3 blocks: 6 into three blocks, 1 discrete.
  CHECK(enumerate_algebra_agendas(4).size() == 7);
}

TEST_CASE("lemma verification on all 3-world agendas") {
  VerificationRun run = verify_lemmas(3, 3);
  CHECK(run.ok());
  CHECK(run.agendas_checked == 7);
  CHECK(run.check_counts.at("entailment-oracle-equivalence") > 0);
  CHECK(run.check_counts.at("lemma3-1") > 0);
}

TEST_CASE("algebra lemma on small universes") {
  CHECK(verify_algebra_lemma(3).ok());
  VerificationRun run = verify_algebra_lemma(4);
  CHECK(run.ok());
  CHECK(run.agendas_checked == 7);
}

TEST_CASE("serial and parallel sweeps agree") {
  VerificationRun par = verify_lemmas(3, 3, true);
  VerificationRun ser = verify_lemmas(3, 3, false);
  CHECK(par.ok() == ser.ok());
  CHECK(par.agendas_checked == ser.agendas_checked);
  CHECK(par.check_counts == ser.check_counts);
  CHECK(par.failures == ser.failures);
}
