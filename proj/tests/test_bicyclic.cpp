#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>

#include "chinese/bicyclic.hpp"
#include "chinese/errors.hpp"

using namespace chinese;

namespace {

  // Oracle: spell p^i q^j p^k q^l and cancel "qp" until none is left.
  Bicyclic by_rewriting(Bicyclic x, Bicyclic y) {
    std::string s = std::string(x.p, 'p') + std::string(x.q, 'q') + std::string(y.p, 'p') + std::string(y.q, 'q');
    for (auto pos = s.find("qp"); pos != std::string::npos; pos = s.find("qp")) {
      s.erase(pos, 2);
    }
    auto const p = s.find_first_not_of('p');
    std::uint64_t const i = p == std::string::npos ? s.size() : p;
    return {i, s.size() - i};
  }

}  // namespace

TEST_CASE("defining relation and small products") {
  CHECK(bmul(Bicyclic::gen_q(), Bicyclic::gen_p()) == Bicyclic::identity());
  CHECK(bmul(Bicyclic::gen_p(), Bicyclic::gen_q()) == Bicyclic{1, 1});
  CHECK(bmul({1, 2}, {3, 1}) == Bicyclic{2, 1});
  CHECK(bmul(Bicyclic::identity(), {4, 7}) == Bicyclic{4, 7});
}

TEST_CASE("product agrees with the rewriting oracle") {
  for (std::uint64_t i = 0; i <= 6; ++i) {
    for (std::uint64_t j = 0; j <= 6; ++j) {
      for (std::uint64_t k = 0; k <= 6; ++k) {
        for (std::uint64_t l = 0; l <= 6; ++l) {
          CHECK(bmul({i, j}, {k, l}) == by_rewriting({i, j}, {k, l}));
        }
      }
    }
  }
}

TEST_CASE("associativity and powers") {
  for (std::uint64_t a = 0; a < 4; ++a) {
    for (std::uint64_t b = 0; b < 4; ++b) {
      Bicyclic const x{a, b}, y{b, a + 1}, z{a + 2, b};
      CHECK((x * y) * z == x * (y * z));
    }
  }
  CHECK(bpow({1, 1}, 5) == Bicyclic{1, 1});
  CHECK(bpow({2, 1}, 3) == Bicyclic{4, 1});
  CHECK(bpow({2, 3}, 0) == Bicyclic::identity());
}

TEST_CASE("Adjan identity holds") {
  CHECK(adjan_check(Bicyclic::identity(), Bicyclic::identity()));
  CHECK(adjan_check({1, 0}, {0, 1}));
  CHECK(adjan_check({2, 3}, {5, 1}));
  for (std::uint64_t a = 0; a < 4; ++a) {
    for (std::uint64_t b = 0; b < 4; ++b) {
      for (std::uint64_t c = 0; c < 4; ++c) {
        for (std::uint64_t d = 0; d < 4; ++d) {
          CHECK(adjan_check({a, b}, {c, d}));
        }
      }
    }
  }
}

TEST_CASE("text forms") {
  CHECK(to_string({2, 3}) == "p^2 q^3");
  CHECK(to_compact_string({2, 3}) == "p^2q^3");
  CHECK(parse_bicyclic("p^2 q^3") == Bicyclic{2, 3});
  CHECK(parse_bicyclic("p^0q^1") == Bicyclic{0, 1});
  CHECK_THROWS_AS(parse_bicyclic("q^1 p^2"), ParseError);
  CHECK_THROWS_AS(parse_bicyclic("p^-1 q^0"), ParseError);
}

TEST_CASE("overflow is detected") {
  auto const big = std::numeric_limits<std::uint64_t>::max();
  Bicyclic const top{big, 0};
  CHECK_THROWS_AS(bmul(top, Bicyclic::gen_p()), ArithmeticOverflow);
  CHECK(bmul(top, Bicyclic::gen_q()) == Bicyclic{big, 1});
  CHECK_THROWS_AS(checked_add(big, std::uint64_t{1}), ArithmeticOverflow);
  CHECK_THROWS_AS(checked_add(std::numeric_limits<std::int64_t>::max(), std::int64_t{1}), ArithmeticOverflow);
  CHECK(checked_add(std::int64_t{-3}, std::int64_t{5}) == 2);
}
