#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chinese/core.hpp"
#include "chinese/errors.hpp"
#include "chinese/representation.hpp"

using namespace chinese;

namespace {

  LeafRepresentation rep(int n, std::string const& id) {
    return build_representation(Diagram::parse(n, id));
  }

  std::string schema_letters(LeafRepresentation const& r) {
    std::string out;
    for (auto const& comp : r.schema().components) {
      out += kind_letter(comp.kind);
    }
    return out;
  }

}  // namespace

TEST_CASE("generator images for the leaf d2 A") {
  auto const r = rep(3, "d2 A");
  CHECK(schema_letters(r) == "NBZ");
  CHECK(r.generator_image(1).to_string() == "(N:0, B:p^1q^0, Z:1)");
  CHECK(r.generator_image(2).to_string() == "(N:1, B:p^0q^0, Z:0)");
  CHECK(r.generator_image(3).to_string() == "(N:0, B:p^0q^1, Z:0)");
  CHECK(r.schema().components[0].origin == "dot a2");
  CHECK(r.schema().components[1].origin == "arc a3 a1");
}

TEST_CASE("word images") {
  auto const r = rep(3, "d2 A");
  CHECK(r.image(Word(3, {3, 2, 1})).to_string() == "(N:1, B:p^0q^0, Z:1)");
  CHECK(r.image(Word(3, {1, 2, 3})).to_string() == "(N:1, B:p^1q^1, Z:1)");
  CHECK(r.image(Word(3)).is_identity());
  CHECK_THROWS_AS(r.image(Word(4, {1})), PreconditionViolated);
  CHECK_THROWS_AS(r.generator_image(4), PreconditionViolated);
}

TEST_CASE("unused generators get their own N factor") {
  auto const r = rep(3, "a2");
  CHECK(schema_letters(r) == "BZN");
  CHECK(r.schema().components[2].origin == "free a3");
  CHECK(r.generator_image(3).to_string() == "(B:p^0q^1, Z:0, N:1)");
  CHECK(r.image(Word(3, {1, 2})) != r.image(Word(3, {2, 1})));
}

TEST_CASE("internal vertices have no representation") {
  CHECK_THROWS_AS(build_representation(Diagram::parse(3, "d2")), NotALeaf);
  CHECK_THROWS_AS(build_representation(Diagram::root(3)), NotALeaf);
}

TEST_CASE("arc elements") {
  CHECK(arc_element_image(rep(3, "a2"), 0).to_string() == "(B:p^0q^0, Z:1, N:0)");
  CHECK(arc_element_image(rep(3, "d2 A"), 1).to_string() == "(N:0, B:p^0q^0, Z:1)");
  CHECK_THROWS_AS(arc_element_image(rep(3, "d2 A"), 0), NotAnArcStep);
  CHECK_THROWS_AS(arc_element_image(rep(3, "d2 A"), 5), NotAnArcStep);
}

TEST_CASE("every leaf map respects the defining relations") {
  for (int n = 3; n <= 6; ++n) {
    for (auto const& leaf : enumerate_leaves(n)) {
      auto const r = build_representation(leaf);
      CHECK(r.schema().c() + 2 * r.schema().d() == static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) {
        for (int k = i; k <= n; ++k) {
          for (int j = k; j <= n; ++j) {
            auto const a = r.image(Word(n, {j, i, k}));
            CHECK(a == r.image(Word(n, {j, k, i})));
            CHECK(a == r.image(Word(n, {k, j, i})));
          }
        }
      }
    }
  }
}

TEST_CASE("embedding equality matches the oracle") {
  CHECK(eq_via_embedding(3, Word(3, {3, 2, 1}), Word(3, {2, 3, 1})));
  CHECK_FALSE(eq_via_embedding(3, Word(3, {1, 2}), Word(3, {2, 1})));
  CHECK(eq_via_embedding(4, Word(4, {4, 1, 3}), Word(4, {4, 1, 3})));
  Embedding const emb(4);
  CHECK(emb.representations().size() == 5);
  auto const words = words_up_to(4, 3);
  for (std::size_t a = 0; a < words.size(); a += 3) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      CHECK(emb.equal(words[a], words[b]) == eq_oracle(words[a], words[b]));
    }
  }
}

TEST_CASE("incomparability witnesses") {
  auto const r1 = rep(3, "a2");
  auto const r2 = rep(3, "a3");
  auto const found = incomparability_witness(r1, r2, 4);
  REQUIRE(found.has_value());
  auto const& [w, v] = *found;
  CHECK(w < v);
  CHECK(r1.image(w) == r1.image(v));
  CHECK(r2.image(w) != r2.image(v));
  CHECK_THROWS_AS(incomparability_witness(r1, r1, 4), PreconditionViolated);
  CHECK_THROWS_AS(incomparability_witness(r1, rep(4, "a2"), 4), PreconditionViolated);
  CHECK_FALSE(incomparability_witness(r1, r2, 0).has_value());
}

TEST_CASE("image tuple layout mismatch") {
  auto a = rep(3, "a2").generator_image(1);
  CHECK_THROWS_AS(a *= rep(3, "d2 A").generator_image(1), PreconditionViolated);
  CHECK_THROWS_AS(a *= rep(4, "a2").generator_image(1), PreconditionViolated);
}
