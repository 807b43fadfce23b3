#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unordered_set>

#include "chinese/errors.hpp"
#include "chinese/word.hpp"

using namespace chinese;

TEST_CASE("numeric and letter syntax parse to the same word") {
  CHECK(parse_word(3, "3 2 1") == Word(3, {3, 2, 1}));
  CHECK(parse_word(3, "cba") == Word(3, {3, 2, 1}));
  CHECK(parse_word(3, "  3   2 1 ") == Word(3, {3, 2, 1}));
  CHECK(parse_word(12, "12 10 1") == Word(12, {12, 10, 1}));
  CHECK(parse_word(3, "").empty());
  CHECK(parse_word(3, "   ").empty());
}

TEST_CASE("output uses numeric syntax") {
  Word const w = parse_word(4, "dab");
  CHECK(w.to_string() == "4 1 2");
  CHECK(w.to_letters() == "dab");
  CHECK(Word(4).to_string().empty());
}

TEST_CASE("malformed words are rejected") {
  CHECK_THROWS_AS(parse_word(3, "4"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "0"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "d"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "1 x"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "1,2"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "-1"), ParseError);
}

TEST_CASE("rank is validated") {
  CHECK_THROWS_AS(validate_rank(0), PreconditionViolated);
  CHECK_THROWS_AS(validate_rank(kMaxRank + 1), PreconditionViolated);
  CHECK_NOTHROW(validate_rank(1));
  CHECK_THROWS_AS(Word(0), PreconditionViolated);
  Word w(2);
  CHECK_THROWS(w.push_back(3));
  CHECK_THROWS(generator(3, 4));
  CHECK(generator(3, 2) == Word(3, {2}));
}

TEST_CASE("concatenation") {
  Word const w = Word(3, {1, 2}) + Word(3, {3});
  CHECK(w == Word(3, {1, 2, 3}));
  CHECK_THROWS(Word(3, {1}) + Word(4, {1}));
}

TEST_CASE("word enumeration is complete, duplicate free and ordered") {
  for (int n = 1; n <= 4; ++n) {
    for (std::size_t len = 0; len <= 4; ++len) {
      auto const words = words_of_length(n, len);
      std::size_t expected = 1;
      for (std::size_t i = 0; i < len; ++i) {
        expected *= static_cast<std::size_t>(n);
      }
      CHECK(words.size() == expected);
      CHECK(std::is_sorted(words.begin(), words.end()));
      std::unordered_set<Word, WordHash> distinct(words.begin(), words.end());
      CHECK(distinct.size() == words.size());
    }
  }
  auto const all = words_up_to(3, 5);
  CHECK(all.size() == 1 + 3 + 9 + 27 + 81 + 243);
  CHECK(all.front().empty());
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i - 1].size() <= all[i].size());
  }
}
