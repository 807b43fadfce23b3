#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chinese/word.hpp"

namespace chinese {

  ////////////////////////////////////////////////////////////////////////
  // Rewriting and the breadth-first congruence oracle
  ////////////////////////////////////////////////////////////////////////

  // Default bound on the number of members generated by congruence_class.
  inline constexpr std::size_t kDefaultClassCap = 200'000;

  // Extra defining pairs, imposed on top of the Chinese relations. Every
  // pair relates words of equal length.
  class CongruencePairs {
   public:
    CongruencePairs() = default;

    void add(Word lhs, Word rhs);

    std::vector<std::pair<Word, Word>> const& pairs() const noexcept {
      return _pairs;
    }
    bool empty() const noexcept {
      return _pairs.empty();
    }
    std::size_t size() const noexcept {
      return _pairs.size();
    }

   private:
    std::vector<std::pair<Word, Word>> _pairs;
  };

  // Words obtained from w by rewriting one factor of length three with
  //   a_j a_i a_k = a_j a_k a_i = a_k a_j a_i   (i <= k <= j)
  // in either direction. The input word itself is never returned.
  std::vector<Word> rewrite_neighbors(Word const& w);

  // Every word reachable from w by the Chinese relations and by the
  // substitutions in `extra` (both directions, any position). Sorted.
  std::vector<Word> congruence_class(Word const&            w,
                                     CongruencePairs const& extra = {},
                                     std::size_t            cap   = kDefaultClassCap);

  // Decides w = v modulo the Chinese relations plus `extra`.
  bool eq_oracle(Word const&            w,
                 Word const&            v,
                 CongruencePairs const& extra = {},
                 std::size_t            cap   = kDefaultClassCap);

  ////////////////////////////////////////////////////////////////////////
  // Staircase canonical form
  ////////////////////////////////////////////////////////////////////////

  // Exponents k[i][j], 1 <= j <= i <= n, of the factorisation
  //   b_1 b_2 ... b_n,  b_r = (a_r a_1)^{k_r1} ... (a_r a_{r-1})^{k_r,r-1} a_r^{k_rr}.
  class StaircaseForm {
   public:
    StaircaseForm() = default;
    explicit StaircaseForm(int rank);

    int rank() const noexcept {
      return _rank;
    }

    // 1-indexed access, j <= i.
    std::uint64_t& at(int i, int j);
    std::uint64_t  at(int i, int j) const;

    // Sum over i > j of 2 k_ij plus the diagonal.
    std::uint64_t degree() const noexcept;
    bool          is_identity() const noexcept;

    Word expand() const;

    // "k22=1 k31=1", or "identity".
    std::string to_string() const;

    // Row i (0-based here) lists k[i+1][1..i+1].
    std::vector<std::vector<std::uint64_t>> const& rows() const noexcept {
      return _k;
    }
    static StaircaseForm from_rows(int rank, std::vector<std::vector<std::uint64_t>> rows);

    friend bool operator==(StaircaseForm const&, StaircaseForm const&) = default;

   private:
    int                                     _rank = 0;
    std::vector<std::vector<std::uint64_t>> _k;
  };

  // Decodes w if it is literally written in staircase shape.
  std::optional<StaircaseForm> match_staircase(Word const& w);

  // The unique staircase member of the class of w, found by exhaustive search
  // of the class. Throws NoStaircaseMember / MultipleStaircaseMembers if the
  // class violates uniqueness, and ClassCapExceeded for oversized classes.
  StaircaseForm to_staircase(Word const& w, std::size_t cap = kDefaultClassCap);

  StaircaseForm multiply(StaircaseForm const& f,
                         StaircaseForm const& g,
                         std::size_t          cap = kDefaultClassCap);

  // Normaliser that remembers the form of every member of each class it has
  // explored, so repeated queries landing in a known class are free. Not
  // thread safe; give each thread its own instance.
  class Normalizer {
   public:
    explicit Normalizer(std::size_t cap = kDefaultClassCap) : _cap(cap) {}

    StaircaseForm const& operator()(Word const& w);

    std::size_t cached_words() const noexcept {
      return _form_of.size();
    }

   private:
    std::size_t                                     _cap;
    std::vector<StaircaseForm>                      _forms;
    std::unordered_map<Word, std::size_t, WordHash> _form_of;
  };

  // Number of staircase forms of weighted degree `length`, counted without
  // touching words.
  std::uint64_t count_classes(int rank, std::size_t length);

  ////////////////////////////////////////////////////////////////////////
  // Products annihilated in the algebra
  ////////////////////////////////////////////////////////////////////////

  enum class BoxplusVariant { v22, v23, v32 };

  // Index tuple for a boxplus identity. For v22 only i, j, k, l are used; for
  // v23 and v32, k must equal j + 1 and m is the extra letter.
  struct BoxplusIndices {
    int i = 0;
    int j = 0;
    int k = 0;
    int l = 0;
    int m = 0;
  };

  bool boxplus_admissible(int rank, BoxplusVariant variant, BoxplusIndices const& ix);
  // All admissible tuples for `rank`, in lexicographic order of (i, j, k, l, m).
  std::vector<BoxplusIndices> boxplus_tuples(int rank, BoxplusVariant variant);

  // The four monomials of alpha w beta; the identity holds iff
  // {terms[0], terms[3]} = {terms[1], terms[2]} as multisets in M.
  std::array<Word, 4> boxplus_terms(int rank, BoxplusVariant variant, BoxplusIndices const& ix, Word const& w);

  bool verify_boxplus(int                   rank,
                      BoxplusVariant        variant,
                      BoxplusIndices const& ix,
                      Word const&           w,
                      std::size_t           cap = kDefaultClassCap);
  // Same check through a caching normaliser.
  bool verify_boxplus(Normalizer& nf, int rank, BoxplusVariant variant, BoxplusIndices const& ix, Word const& w);

  ////////////////////////////////////////////////////////////////////////
  // First level congruences
  ////////////////////////////////////////////////////////////////////////

  enum class FirstLevelKind { heart, diamond };

  // Generating pairs of the congruence of heart type (2 <= s <= n-1, a_s
  // becomes central) or diamond type (2 <= s <= n, a_s a_{s-1} becomes
  // central). Trivial pairs are omitted and each unordered pair appears once.
  CongruencePairs first_level_pairs(FirstLevelKind kind, int s, int rank);

}  // namespace chinese
