#include <doctest.h>

#include <nlohmann/json.hpp>

#include "bba/json_io.hpp"
#include "fixtures.hpp"

using namespace bba;
using namespace fixtures;

TEST_CASE("agenda from explicit world-set form") {
  Json j = Json::parse(R"({
    "worlds": ["w00", "w10", "w01", "w11"],
    "issues": [
      {"name": "p", "worlds": [1, 3]},
      {"name": "q", "worlds": [2, 3]},
      {"name": "c", "worlds": [3]}
    ],
    "auto_close": true
  })");
  Agenda a = agenda_from_json(j);
  Agenda f = conj_agenda();
  CHECK(a.issues == f.issues);
  CHECK(a.names == f.names);
  CHECK(a.universe.labels == f.universe.labels);
}

TEST_CASE("agenda from formula form") {
  Json j = Json::parse(R"({"atoms": ["p", "q"], "formulas": ["p", "q", "p & q"]})");
  CHECK(agenda_from_json(j).issues == conj_agenda().issues);
}

TEST_CASE("agenda errors") {
  CHECK_THROWS_AS(agenda_from_json(Json::parse(R"({"issues": []})")), Error);
  CHECK_THROWS_AS(agenda_from_json(Json::parse(
                      R"({"worlds": 2, "issues": [{"worlds": [0, 1]}], "auto_close": true})")),
                  Error);
  CHECK_THROWS_AS(agenda_from_json(Json::parse(
                      R"({"worlds": 2, "issues": [{"worlds": [0]}], "auto_close": false})")),
                  Error);
  CHECK_THROWS_AS(agenda_from_json(Json::parse(
                      R"({"worlds": 2, "issues": [{"worlds": [2]}], "auto_close": true})")),
                  Error);
}

TEST_CASE("agenda round trip") {
  for (Agenda a : {pair_agenda(), conj_agenda(), bicond_agenda(), alg3_agenda()}) {
    Agenda back = agenda_from_json(agenda_to_json(a));
    CHECK(back.issues == a.issues);
    CHECK(back.names == a.names);
    REQUIRE(back.universe.size == a.universe.size);
    for (int w = 0; w < a.universe.size; ++w)
      CHECK(back.universe.world_name(w) == a.universe.world_name(w));
  }
}

TEST_CASE("profile round trip") {
  Json j = Json::parse(R"({"masses": [
    [[1, 2], [1, 6], [1, 6], [1, 6]],
    [[0, 1], [0, 1], [0, 1], [1, 1]]
  ]})");
  Profile pr = profile_from_json(j);
  REQUIRE(pr.n() == 2);
  CHECK(pr.members[0].mass[0] == Rat(1, 2));
  CHECK(pr.members[1].mass[3] == Rat(1));
  CHECK(profile_from_json(profile_to_json(pr)).members[0].mass == pr.members[0].mass);

  CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"masses": [[[1, 2], [1, 3]]]})")), Error);
  CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"masses": [[[1, 1], [-1, 1], [1, 1]]]})")),
                  Error);
}

TEST_CASE("serialization is deterministic") {
  Agenda a = conj_agenda();
  CHECK(agenda_to_json(a).dump() == agenda_to_json(conj_agenda()).dump());
  ClassificationReport rep = classify(a);
  CHECK(classification_to_json(a, rep).dump() ==
        classification_to_json(a, classify(conj_agenda())).dump());
}

TEST_CASE("classification JSON carries the verdicts and witnesses") {
  Agenda a = bicond_agenda();
  Json j = classification_to_json(a, classify(a));
  CHECK(j.at("flags").at("blocked").get<bool>());
  CHECK(j.at("flags").at("negation_connected").get<bool>());
  CHECK_FALSE(j.at("flags").at("even_negatable").get<bool>());
  CHECK(j.at("flags").at("median_points").empty());
  CHECK(j.at("verdicts").at("triviality").at("applies").get<bool>());
  CHECK_FALSE(j.at("verdicts").at("oligarchy").at("applies").get<bool>());
}
