#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chinese/errors.hpp"
#include "chinese/serialize.hpp"

using namespace chinese;
using json = nlohmann::ordered_json;

TEST_CASE("staircase JSON") {
  StaircaseForm const f = to_staircase(Word(3, {3, 2, 1}));
  json const          j = staircase_to_json(f);
  CHECK(j.dump() == R"({"n":3,"k":[[0],[0,1],[1,0,0]]})");
  CHECK(staircase_from_json(j) == f);
  CHECK_THROWS_AS(staircase_from_json(json{{"n", 3}}), ParseError);
  CHECK_THROWS_AS(staircase_from_json(json::parse(R"({"n":3,"k":[[0],[0,-1],[1,0,0]]})")), ParseError);
  CHECK_THROWS_AS(staircase_from_json(json::parse(R"({"n":2,"k":[[0],[0,1],[1,0,0]]})")), Error);
}

TEST_CASE("bicyclic JSON") {
  CHECK(bicyclic_to_json({2, 5}).dump() == R"({"p":2,"q":5})");
  CHECK(bicyclic_from_json(json::parse(R"({"p":2,"q":5})")) == Bicyclic{2, 5});
  CHECK_THROWS_AS(bicyclic_from_json(json::parse(R"({"p":-1,"q":5})")), ParseError);
}

TEST_CASE("representation JSON") {
  auto const r = build_representation(Diagram::parse(3, "d2 A"));
  CHECK(representation_to_json(r).dump()
        == R"({"leaf":"d2 A","schema":[{"kind":"N","origin":"dot a2"},{"kind":"B","origin":"arc a3 a1"},)"
           R"({"kind":"Z","origin":"arc a3 a1"}],"images":{"1":[0,{"p":1,"q":0},1],"2":[1,{"p":0,"q":0},0],)"
           R"("3":[0,{"p":0,"q":1},0]}})");
}

TEST_CASE("leaf list JSON") {
  json const j = leaves_to_json(3, enumerate_leaves(3));
  CHECK(j.dump()
        == R"({"n":3,"leaves":[{"id":"d2 A","steps":["d2","A"],"c":1,"d":1},)"
           R"({"id":"a2","steps":["a2"],"c":1,"d":1},{"id":"a3","steps":["a3"],"c":1,"d":1}]})");
}
