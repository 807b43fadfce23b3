#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "chinese/errors.hpp"
#include "chinese/tree.hpp"

using namespace chinese;

namespace {

  std::vector<std::string> ids(std::vector<Diagram> const& ds) {
    std::vector<std::string> out;
    for (auto const& d : ds) {
      out.push_back(d.id());
    }
    return out;
  }

}  // namespace

TEST_CASE("first level") {
  CHECK(ids(Diagram::root(4).children()) == std::vector<std::string>{"d2", "d3", "a2", "a3", "a4"});
  for (int n = 3; n <= 9; ++n) {
    CHECK(Diagram::root(n).children().size() == static_cast<std::size_t>(2 * n - 3));
  }
}

TEST_CASE("legal steps") {
  Diagram const d2 = Diagram::parse(3, "d2");
  auto const    steps = d2.legal_steps();
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].kind == StepKind::arc_above);
  auto const place = d2.child(steps[0]).placements().back();
  CHECK(place.x == 1);
  CHECK(place.y == 3);

  CHECK(Diagram::parse(3, "a2").legal_steps().empty());
  CHECK(Diagram::parse(3, "a2").is_leaf());
  CHECK_FALSE(Diagram::root(3).is_leaf());

  // After an arc in the middle, A, L and R in that order.
  CHECK(ids(Diagram::parse(6, "a4").children()) == std::vector<std::string>{"a4 A", "a4 L", "a4 R"});
  // A dot on the left may only continue to the left, while room remains.
  CHECK(ids(Diagram::parse(6, "a5 L").children()) == std::vector<std::string>{"a5 L A", "a5 L L"});
  CHECK(ids(Diagram::parse(6, "a4 L").children()) == std::vector<std::string>{"a4 L A"});
  CHECK(ids(Diagram::parse(6, "a4 R").children()) == std::vector<std::string>{"a4 R A"});
}

TEST_CASE("leaves for small ranks") {
  CHECK(ids(enumerate_leaves(3)) == std::vector<std::string>{"d2 A", "a2", "a3"});
  CHECK(enumerate_leaves(4).size() == 5);
  CHECK(enumerate_leaves(5).size() == 9);
  CHECK_THROWS_AS(enumerate_leaves(2), RankTooSmall);
  CHECK_THROWS_AS(Diagram::root(1), RankTooSmall);
}

TEST_CASE("leaf counts follow the Tribonacci numbers") {
  std::vector<std::uint64_t> const expected{3, 5, 9, 17, 31, 57, 105, 193};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    int const n = static_cast<int>(i) + 3;
    CHECK(tribonacci(static_cast<std::size_t>(n)) == expected[i]);
    CHECK(enumerate_leaves(n).size() == expected[i]);
  }
  CHECK(tribonacci(0) == 1);
  CHECK(tribonacci(1) == 1);
  CHECK(tribonacci(2) == 1);
  CHECK(tribonacci(10) == 193);
  CHECK(enumerate_leaves(11).size() == 355);
  CHECK(enumerate_leaves(12).size() == 653);
}

TEST_CASE("U sequence") {
  CHECK(u_sequence(0) == 1);
  CHECK(u_sequence(3) == 3);
  CHECK(u_sequence(4) == 5);
  for (std::size_t k = 0; k <= 20; ++k) {
    CHECK(u_sequence(k) == tribonacci(k));
  }
  for (std::size_t n = 3; n <= 20; ++n) {
    CHECK(leaf_count_from_u(n) == tribonacci(n));
  }
}

TEST_CASE("ids round trip and are unique") {
  for (int n = 3; n <= 7; ++n) {
    auto const            vertices = enumerate_vertices(n);
    std::set<std::string> seen;
    for (auto const& v : vertices) {
      CHECK(Diagram::parse(n, v.id()) == v);
      CHECK(seen.insert(v.id()).second);
      CHECK(v.c() + 2 * v.d() <= static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("malformed ids") {
  CHECK_THROWS_AS(Diagram::parse(3, "d3"), MalformedDiagram);
  CHECK_THROWS_AS(Diagram::parse(3, "a1"), MalformedDiagram);
  CHECK_THROWS_AS(Diagram::parse(3, "a2 A"), MalformedDiagram);
  CHECK_THROWS_AS(Diagram::parse(3, "d2 L"), MalformedDiagram);
  CHECK_THROWS_AS(Diagram::parse(3, "A"), MalformedDiagram);
  CHECK_THROWS_AS(Diagram::parse(3, "x2"), MalformedDiagram);
  CHECK_THROWS_AS(Diagram::parse(5, "a3 L R"), MalformedDiagram);
}

TEST_CASE("ascii rendering") {
  CHECK(render_ascii(Diagram::parse(3, "a2")) == "+-+\n* * o\n");
  CHECK(render_ascii(Diagram::parse(3, "d2 A")) == "+---+\n* * *\n");
  CHECK(render_ascii(Diagram::root(3)) == "o o o\n");
  for (int n = 3; n <= 7; ++n) {
    for (auto const& v : enumerate_vertices(n)) {
      if (v.is_root()) {
        continue;
      }
      // A drawing only loses the order of dots, which a vertex of D determines.
      CHECK(Diagram::from_ascii(n, render_ascii(v)) == v);
    }
  }
  CHECK_THROWS_AS(Diagram::from_ascii(3, "+-+\n* o *\n"), MalformedDiagram);
}

TEST_CASE("dot rendering lists every vertex") {
  std::string const dot = render(Diagram::root(3), RenderFormat::dot);
  CHECK(dot.rfind("digraph D {", 0) == 0);
  std::size_t nodes = 0, edges = 0, leaves = 0;
  for (std::size_t pos = dot.find("[label="); pos != std::string::npos; pos = dot.find("[label=", pos + 1)) {
    ++nodes;
  }
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) {
    ++edges;
  }
  for (std::size_t pos = dot.find("peripheries"); pos != std::string::npos; pos = dot.find("peripheries", pos + 1)) {
    ++leaves;
  }
  CHECK(nodes == 5);
  CHECK(edges == 4);
  CHECK(leaves == 3);
}
