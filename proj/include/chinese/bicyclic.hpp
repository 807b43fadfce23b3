#pragma once

#include <cstdint>
#include <string>

namespace chinese {

  // p^i q^j in the bicyclic monoid <p, q | qp = 1>.
  struct Bicyclic {
    std::uint64_t p = 0;
    std::uint64_t q = 0;

    static constexpr Bicyclic identity() noexcept {
      return {0, 0};
    }
    static constexpr Bicyclic gen_p() noexcept {
      return {1, 0};
    }
    static constexpr Bicyclic gen_q() noexcept {
      return {0, 1};
    }

    bool is_identity() const noexcept {
      return p == 0 && q == 0;
    }

    friend bool operator==(Bicyclic const&, Bicyclic const&) = default;
    friend auto operator<=>(Bicyclic const&, Bicyclic const&) = default;
  };

  // (i, j)(k, l) = (i + max(0, k - j), l + max(0, j - k)). Throws
  // ArithmeticOverflow instead of wrapping.
  Bicyclic bmul(Bicyclic x, Bicyclic y);

  inline Bicyclic operator*(Bicyclic x, Bicyclic y) {
    return bmul(x, y);
  }

  Bicyclic bpow(Bicyclic x, std::uint64_t e);

  // Both sides of x y^2 x . x y . x y^2 x = x y^2 x . y x . x y^2 x.
  bool adjan_check(Bicyclic x, Bicyclic y);

  // "p^i q^j"
  std::string to_string(Bicyclic x);
  // "p^iq^j", the compact form used inside image tuples.
  std::string to_compact_string(Bicyclic x);
  Bicyclic    parse_bicyclic(std::string const& text);

  // Checked arithmetic shared with the representation code.
  std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
  std::int64_t  checked_add(std::int64_t a, std::int64_t b);

}  // namespace chinese
