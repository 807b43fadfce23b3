#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chinese {

  using Letter = std::uint8_t;

  // Largest supported rank. Letters are stored in a byte.
  inline constexpr int kMaxRank = 64;

  // Element of the free monoid on a_1..a_n. Letters are 1-indexed; the empty
  // word is the identity.
  class Word {
   public:
    Word() = default;
    explicit Word(int rank);
    Word(int rank, std::vector<Letter> letters);
    Word(int rank, std::initializer_list<int> letters);

    int rank() const noexcept {
      return _rank;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    int operator[](std::size_t i) const noexcept {
      return _letters[i];
    }
    std::span<Letter const> letters() const noexcept {
      return _letters;
    }
    std::vector<Letter> const& storage() const noexcept {
      return _letters;
    }

    void push_back(int letter);
    Word& operator+=(Word const& other);

    friend Word operator+(Word lhs, Word const& rhs) {
      lhs += rhs;
      return lhs;
    }
    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const& a, Word const& b) {
      return a._letters <=> b._letters;
    }

    // Whitespace separated indices, the canonical output syntax.
    std::string to_string() const;
    // Letter syntax a=1, ..., z=26.
    std::string to_letters() const;

   private:
    int                 _rank = 1;
    std::vector<Letter> _letters;
  };

  // Accepts "3 2 1" or "cba". The empty string is the identity.
  Word parse_word(int rank, std::string_view text);

  void validate_rank(int rank);

  // Generator a_i as a word of length one.
  Word generator(int rank, int i);

  // All words of length exactly `length`, in lexicographic order.
  std::vector<Word> words_of_length(int rank, std::size_t length);
  // All words of length at most `max_length`, ordered by (length, lex).
  std::vector<Word> words_up_to(int rank, std::size_t max_length);

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
    std::size_t operator()(std::vector<Letter> const& v) const noexcept;
  };

}  // namespace chinese
