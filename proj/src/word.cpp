#include "chinese/word.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "chinese/errors.hpp"

namespace chinese {

  void validate_rank(int rank) {
    if (rank < 1 || rank > kMaxRank) {
      throw PreconditionViolated("rank must lie in 1.." + std::to_string(kMaxRank)
                                 + ", got " + std::to_string(rank));
    }
  }

  Word::Word(int rank) : _rank(rank) {
    validate_rank(rank);
  }

  Word::Word(int rank, std::vector<Letter> letters) : Word(rank) {
    for (Letter x : letters) {
      if (x < 1 || x > rank) {
        throw ParseError("letter " + std::to_string(x) + " outside 1.." + std::to_string(rank));
      }
    }
    _letters = std::move(letters);
  }

  Word::Word(int rank, std::initializer_list<int> letters) : Word(rank) {
    _letters.reserve(letters.size());
    for (int x : letters) {
      push_back(x);
    }
  }

  void Word::push_back(int letter) {
    if (letter < 1 || letter > _rank) {
      throw ParseError("letter " + std::to_string(letter) + " outside 1.." + std::to_string(_rank));
    }
    _letters.push_back(static_cast<Letter>(letter));
  }

  Word& Word::operator+=(Word const& other) {
    if (other._rank != _rank) {
      throw PreconditionViolated("cannot concatenate words of different rank");
    }
    _letters.insert(_letters.end(), other._letters.begin(), other._letters.end());
    return *this;
  }

  std::string Word::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < _letters.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += std::to_string(_letters[i]);
    }
    return out;
  }

  std::string Word::to_letters() const {
    std::string out;
    for (Letter x : _letters) {
      if (x > 26) {
        throw PreconditionViolated("letter syntax only covers ranks up to 26");
      }
      out += static_cast<char>('a' + x - 1);
    }
    return out;
  }

  Word parse_word(int rank, std::string_view text) {
    Word result(rank);
    bool has_digit = false;
    for (char c : text) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        has_digit = true;
        break;
      }
    }
    if (has_digit) {
      std::size_t pos = 0;
      while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
          ++pos;
          continue;
        }
        int         value = 0;
        auto const* first = text.data() + pos;
        auto const* last  = text.data() + text.size();
        auto [ptr, ec]    = std::from_chars(first, last, value);
        if (ec != std::errc() || (ptr != last && !std::isspace(static_cast<unsigned char>(*ptr)))) {
          throw ParseError("malformed word \"" + std::string(text) + "\"");
        }
        result.push_back(value);
        pos = static_cast<std::size_t>(ptr - text.data());
      }
      return result;
    }
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        continue;
      }
      if (c < 'a' || c > 'z') {
        throw ParseError("malformed word \"" + std::string(text) + "\"");
      }
      result.push_back(c - 'a' + 1);
    }
    return result;
  }

  Word generator(int rank, int i) {
    Word w(rank);
    w.push_back(i);
    return w;
  }

  std::vector<Word> words_of_length(int rank, std::size_t length) {
    validate_rank(rank);
    std::vector<Word>   out;
    std::vector<Letter> current(length, 1);
    while (true) {
      out.emplace_back(rank, current);
      std::size_t i = length;
      while (i > 0 && current[i - 1] == rank) {
        current[i - 1] = 1;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++current[i - 1];
    }
    return out;
  }

  std::vector<Word> words_up_to(int rank, std::size_t max_length) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= max_length; ++len) {
      auto level = words_of_length(rank, len);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

  std::size_t WordHash::operator()(std::vector<Letter> const& v) const noexcept {
    // FNV-1a
    std::size_t h = 1469598103934665603ull;
    for (Letter x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    return (*this)(w.storage()) ^ static_cast<std::size_t>(w.rank());
  }

}  // namespace chinese
