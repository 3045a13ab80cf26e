#include <doctest.h>

#include <random>

#include "bba/mis.hpp"
#include "fixtures.hpp"

using namespace bba;
using namespace fixtures;

TEST_CASE("is_minimally_inconsistent") {
  Agenda c = conj_agenda();
  CHECK(is_minimally_inconsistent(c, sel(c, {"p", "q", "~c"})));
  CHECK_FALSE(is_minimally_inconsistent(c, sel(c, {"p", "~p", "q"})));
  Agenda p = pair_agenda();
  CHECK(is_minimally_inconsistent(p, 0b11));
}

TEST_CASE("MIS families of the fixtures") {
  Agenda p = pair_agenda();
  CHECK(minimally_inconsistent_subsets(p).sets == std::vector<IssueSel>{0b11});

  Agenda c = conj_agenda();
  MisFamily fam = minimally_inconsistent_subsets(c);
  std::vector<IssueSel> expected = {
      sel(c, {"p", "~p"}),  sel(c, {"q", "~q"}), sel(c, {"c", "~c"}),
      sel(c, {"~p", "c"}),  sel(c, {"~q", "c"}), sel(c, {"p", "q", "~c"}),
  };
  std::sort(expected.begin(), expected.end(), [](IssueSel x, IssueSel y) {
    return popcount(x) != popcount(y) ? popcount(x) < popcount(y) : x < y;
  });
  CHECK(fam.sets == expected);

  Agenda s4 = simple4_agenda();
  MisFamily fam4 = minimally_inconsistent_subsets(s4);
  CHECK(fam4.sets == std::vector<IssueSel>{sel(s4, {"p", "~p"}), sel(s4, {"q", "~q"})});
}

TEST_CASE("max_size bound and issue cap") {
  Agenda c = conj_agenda();
  MisFamily pairs_only = minimally_inconsistent_subsets(c, 2);
  for (IssueSel y : pairs_only.sets) CHECK(popcount(y) <= 2);
  CHECK(pairs_only.sets.size() == 5);
  CHECK_THROWS_AS(minimally_inconsistent_subsets(c, -1, 4), Error);
}

TEST_CASE("family equals the brute-force filter; parallel matches serial") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    Universe u = Universe::of(3 + static_cast<int>(rng() % 2));
    std::vector<WorldSet> sets;
    for (int k = 0; k < 3; ++k) {
      WorldSet s = rng() & u.full();
      if (s != 0 && s != u.full()) sets.push_back(s);
    }
    if (sets.empty()) continue;
    Agenda a = make_agenda(u, sets, true);
    MisFamily fast = minimally_inconsistent_subsets(a);
    MisFamily serial = minimally_inconsistent_subsets_serial(a);
    CHECK(fast.sets == serial.sets);
    std::vector<IssueSel> brute;
    for (IssueSel s = 1; s < (IssueSel{1} << a.size()); ++s)
      if (is_minimally_inconsistent(a, s)) brute.push_back(s);
    std::sort(brute.begin(), brute.end(), [](IssueSel x, IssueSel y) {
      return popcount(x) != popcount(y) ? popcount(x) < popcount(y) : x < y;
    });
    CHECK(fast.sets == brute);
    for (IssueSel y : fast.sets) CHECK(is_minimally_inconsistent(a, y));
  }
}

TEST_CASE("negate_subset") {
  Agenda c = conj_agenda();
  CHECK(negate_subset(c, sel(c, {"p", "q", "~c"}), sel(c, {"p", "q"})) ==
        sel(c, {"~p", "~q", "~c"}));
  CHECK(negate_subset(c, sel(c, {"p", "q"}), 0) == sel(c, {"p", "q"}));

  Agenda b = bicond_agenda();
  CHECK(negate_subset(b, sel(b, {"p", "q", "~e"}), sel(b, {"p", "~e"})) ==
        sel(b, {"~p", "q", "e"}));

  CHECK_THROWS_AS(negate_subset(c, sel(c, {"p"}), sel(c, {"q"})), Error);
}

TEST_CASE("negating all members twice is the identity") {
  Agenda c = conj_agenda();
  MisFamily fam = minimally_inconsistent_subsets(c);
  for (IssueSel y : fam.sets) {
    IssueSel negated = negate_subset(c, y, y);
    CHECK(negate_subset(c, negated, negated) == y);
  }
}
