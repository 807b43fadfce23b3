#include "chinese/bicyclic.hpp"

#include <regex>

#include "chinese/errors.hpp"

namespace chinese {

  std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
      throw ArithmeticOverflow("natural exponent overflows 64 bits");
    }
    return out;
  }

  std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
      throw ArithmeticOverflow("integer exponent overflows 64 bits");
    }
    return out;
  }

  Bicyclic bmul(Bicyclic x, Bicyclic y) {
    if (x.q >= y.p) {
      return {x.p, checked_add(y.q, x.q - y.p)};
    }
    return {checked_add(x.p, y.p - x.q), y.q};
  }

  Bicyclic bpow(Bicyclic x, std::uint64_t e) {
    Bicyclic result = Bicyclic::identity();
    for (std::uint64_t t = 0; t < e; ++t) {
      result = bmul(result, x);
    }
    return result;
  }

  bool adjan_check(Bicyclic x, Bicyclic y) {
    Bicyclic const xyyx = x * y * y * x;
    return xyyx * x * y * xyyx == xyyx * y * x * xyyx;
  }

  std::string to_string(Bicyclic x) {
    return "p^" + std::to_string(x.p) + " q^" + std::to_string(x.q);
  }

  std::string to_compact_string(Bicyclic x) {
    return "p^" + std::to_string(x.p) + "q^" + std::to_string(x.q);
  }

  Bicyclic parse_bicyclic(std::string const& text) {
    static std::regex const pattern(R"(\s*p\^(\d+)\s*q\^(\d+)\s*)");
    std::smatch             m;
    if (!std::regex_match(text, m, pattern)) {
      throw ParseError("expected \"p^i q^j\", got \"" + text + "\"");
    }
    try {
      return {std::stoull(m[1].str()), std::stoull(m[2].str())};
    } catch (std::out_of_range const&) {
      throw ParseError("bicyclic exponent out of range in \"" + text + "\"");
    }
  }

}  // namespace chinese
