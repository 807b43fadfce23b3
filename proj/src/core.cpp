#include "chinese/core.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "chinese/errors.hpp"

namespace chinese {

  namespace {

    using Letters = std::vector<Letter>;

    // Calls f(y0, y1, y2) for every factor equivalent to (x0, x1, x2) under
    //   j i k = j k i = k j i,  i <= k <= j,
    // other than the factor itself.
    template <typename F>
    void for_each_triple_rewrite(Letter x0, Letter x1, Letter x2, F&& f) {
      std::array<std::array<Letter, 3>, 6> out;
      std::size_t                          count = 0;
      auto emit = [&](Letter a, Letter b, Letter c) {
        if (a == x0 && b == x1 && c == x2) {
          return;
        }
        std::array<Letter, 3> t{a, b, c};
        if (std::find(out.begin(), out.begin() + count, t) == out.begin() + count) {
          out[count++] = t;
        }
      };
      // x0 x1 x2 read as j i k
      if (x1 <= x2 && x2 <= x0) {
        emit(x0, x2, x1);
        emit(x2, x0, x1);
      }
      // read as j k i
      if (x2 <= x1 && x1 <= x0) {
        emit(x0, x2, x1);
        emit(x1, x0, x2);
      }
      // read as k j i
      if (x2 <= x0 && x0 <= x1) {
        emit(x1, x2, x0);
        emit(x1, x0, x2);
      }
      for (std::size_t t = 0; t < count; ++t) {
        f(out[t][0], out[t][1], out[t][2]);
      }
    }

    template <typename F>
    void for_each_neighbor(Letters const& w, std::vector<std::pair<Letters, Letters>> const& subs, F&& f) {
      Letters scratch = w;
      for (std::size_t p = 0; p + 3 <= w.size(); ++p) {
        for_each_triple_rewrite(w[p], w[p + 1], w[p + 2], [&](Letter a, Letter b, Letter c) {
          scratch[p]     = a;
          scratch[p + 1] = b;
          scratch[p + 2] = c;
          f(scratch);
        });
        scratch[p]     = w[p];
        scratch[p + 1] = w[p + 1];
        scratch[p + 2] = w[p + 2];
      }
      for (auto const& [from, to] : subs) {
        if (from.size() > w.size()) {
          continue;
        }
        for (std::size_t p = 0; p + from.size() <= w.size(); ++p) {
          if (!std::equal(from.begin(), from.end(), w.begin() + p)) {
            continue;
          }
          std::copy(to.begin(), to.end(), scratch.begin() + p);
          f(scratch);
          std::copy(from.begin(), from.end(), scratch.begin() + p);
        }
      }
    }

    // Both orientations of every extra pair.
    std::vector<std::pair<Letters, Letters>> oriented(CongruencePairs const& extra, int rank) {
      std::vector<std::pair<Letters, Letters>> subs;
      for (auto const& [lhs, rhs] : extra.pairs()) {
        if (lhs.rank() != rank || rhs.rank() != rank) {
          throw PreconditionViolated("congruence pair rank differs from the word rank");
        }
        if (lhs == rhs) {
          continue;
        }
        subs.emplace_back(lhs.storage(), rhs.storage());
        subs.emplace_back(rhs.storage(), lhs.storage());
      }
      return subs;
    }

    std::unordered_set<Letters, WordHash> closure(Word const&                                     w,
                                                  std::vector<std::pair<Letters, Letters>> const& subs,
                                                  std::size_t                                     cap,
                                                  Letters const* stop_at = nullptr) {
      if (cap == 0) {
        throw PreconditionViolated("class cap must be positive");
      }
      std::unordered_set<Letters, WordHash> seen;
      std::deque<Letters>                   queue;
      seen.insert(w.storage());
      queue.push_back(w.storage());
      while (!queue.empty()) {
        Letters current = std::move(queue.front());
        queue.pop_front();
        for_each_neighbor(current, subs, [&](Letters const& next) {
          if (seen.insert(next).second) {
            if (seen.size() > cap) {
              throw ClassCapExceeded("congruence class of \"" + w.to_string() + "\" exceeds "
                                     + std::to_string(cap) + " members");
            }
            queue.push_back(next);
          }
        });
        if (stop_at != nullptr && seen.contains(*stop_at)) {
          break;
        }
      }
      return seen;
    }

    std::vector<Word> sorted_words(int rank, std::unordered_set<Letters, WordHash> const& set) {
      std::vector<Word> out;
      out.reserve(set.size());
      for (auto const& letters : set) {
        out.emplace_back(rank, letters);
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    StaircaseForm unique_staircase(Word const& w, std::vector<Word> const& cls) {
      std::optional<StaircaseForm> found;
      for (auto const& member : cls) {
        if (auto form = match_staircase(member)) {
          if (found) {
            throw MultipleStaircaseMembers("class of \"" + w.to_string()
                                           + "\" has several staircase members");
          }
          found = std::move(form);
        }
      }
      if (!found) {
        throw NoStaircaseMember("class of \"" + w.to_string() + "\" has no staircase member");
      }
      return *found;
    }

  }  // namespace

  void CongruencePairs::add(Word lhs, Word rhs) {
    if (lhs.size() != rhs.size()) {
      throw PreconditionViolated("congruence pairs must relate words of equal length");
    }
    _pairs.emplace_back(std::move(lhs), std::move(rhs));
  }

  std::vector<Word> rewrite_neighbors(Word const& w) {
    std::unordered_set<Letters, WordHash> found;
    for_each_neighbor(w.storage(), {}, [&](Letters const& next) {
      if (next != w.storage()) {
        found.insert(next);
      }
    });
    return sorted_words(w.rank(), found);
  }

  std::vector<Word> congruence_class(Word const& w, CongruencePairs const& extra, std::size_t cap) {
    return sorted_words(w.rank(), closure(w, oriented(extra, w.rank()), cap));
  }

  bool eq_oracle(Word const& w, Word const& v, CongruencePairs const& extra, std::size_t cap) {
    if (w.rank() != v.rank()) {
      throw PreconditionViolated("eq_oracle needs words of equal rank");
    }
    if (w.size() != v.size()) {
      return false;
    }
    if (w == v) {
      return true;
    }
    auto cls = closure(w, oriented(extra, w.rank()), cap, &v.storage());
    return cls.contains(v.storage());
  }

  ////////////////////////////////////////////////////////////////////////
  // StaircaseForm
  ////////////////////////////////////////////////////////////////////////

  StaircaseForm::StaircaseForm(int rank) : _rank(rank) {
    validate_rank(rank);
    _k.resize(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) {
      _k[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 0);
    }
  }

  std::uint64_t& StaircaseForm::at(int i, int j) {
    if (j < 1 || j > i || i > _rank) {
      throw PreconditionViolated("staircase index (" + std::to_string(i) + "," + std::to_string(j)
                                 + ") out of range");
    }
    return _k[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }

  std::uint64_t StaircaseForm::at(int i, int j) const {
    return const_cast<StaircaseForm*>(this)->at(i, j);
  }

  std::uint64_t StaircaseForm::degree() const noexcept {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < _k.size(); ++i) {
      for (std::size_t j = 0; j < _k[i].size(); ++j) {
        total += (i == j ? 1 : 2) * _k[i][j];
      }
    }
    return total;
  }

  bool StaircaseForm::is_identity() const noexcept {
    return std::all_of(_k.begin(), _k.end(), [](auto const& row) {
      return std::all_of(row.begin(), row.end(), [](std::uint64_t x) { return x == 0; });
    });
  }

  Word StaircaseForm::expand() const {
    Word w(_rank);
    for (int r = 1; r <= _rank; ++r) {
      for (int j = 1; j < r; ++j) {
        for (std::uint64_t t = 0; t < at(r, j); ++t) {
          w.push_back(r);
          w.push_back(j);
        }
      }
      for (std::uint64_t t = 0; t < at(r, r); ++t) {
        w.push_back(r);
      }
    }
    return w;
  }

  std::string StaircaseForm::to_string() const {
    std::string out;
    for (int i = 1; i <= _rank; ++i) {
      for (int j = 1; j <= i; ++j) {
        if (at(i, j) == 0) {
          continue;
        }
        if (!out.empty()) {
          out += ' ';
        }
        out += 'k' + std::to_string(i);
        out += (_rank > 9 ? "," : "") + std::to_string(j) + '=' + std::to_string(at(i, j));
      }
    }
    return out.empty() ? "identity" : out;
  }

  StaircaseForm StaircaseForm::from_rows(int rank, std::vector<std::vector<std::uint64_t>> rows) {
    StaircaseForm f(rank);
    if (rows.size() != static_cast<std::size_t>(rank)) {
      throw ParseError("staircase form of rank " + std::to_string(rank) + " needs " + std::to_string(rank)
                       + " rows");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != i + 1) {
        throw ParseError("staircase row " + std::to_string(i + 1) + " must have " + std::to_string(i + 1)
                         + " entries");
      }
    }
    f._k = std::move(rows);
    return f;
  }

  std::optional<StaircaseForm> match_staircase(Word const& w) {
    StaircaseForm form(w.rank());
    // Tokens are ordered (1), (2,1), (2), (3,1), (3,2), (3), ...; a token
    // (r, j) sits at position (r, j) and (r) at (r, r).
    int         last_r = 0;
    int         last_j = 0;
    std::size_t p      = 0;
    while (p < w.size()) {
      int r = w[p];
      int j = r;
      if (p + 1 < w.size() && w[p + 1] < r) {
        j = w[p + 1];
        p += 2;
      } else {
        p += 1;
      }
      if (r < last_r || (r == last_r && j < last_j)) {
        return std::nullopt;
      }
      last_r = r;
      last_j = j;
      ++form.at(r, j);
    }
    return form;
  }

  StaircaseForm to_staircase(Word const& w, std::size_t cap) {
    return unique_staircase(w, congruence_class(w, {}, cap));
  }

  StaircaseForm multiply(StaircaseForm const& f, StaircaseForm const& g, std::size_t cap) {
    if (f.rank() != g.rank()) {
      throw PreconditionViolated("multiply needs forms of equal rank");
    }
    return to_staircase(f.expand() + g.expand(), cap);
  }

  StaircaseForm const& Normalizer::operator()(Word const& w) {
    if (auto it = _form_of.find(w); it != _form_of.end()) {
      return _forms[it->second];
    }
    auto cls = congruence_class(w, {}, _cap);
    _forms.push_back(unique_staircase(w, cls));
    std::size_t const index = _forms.size() - 1;
    for (auto& member : cls) {
      _form_of.emplace(std::move(member), index);
    }
    return _forms[index];
  }

  std::uint64_t count_classes(int rank, std::size_t length) {
    validate_rank(rank);
    // Unbounded knapsack over n(n-1)/2 parts of weight 2 and n parts of weight 1.
    std::vector<std::uint64_t> ways(length + 1, 0);
    ways[0] = 1;
    auto add_part = [&](std::size_t weight) {
      for (std::size_t d = weight; d <= length; ++d) {
        if (__builtin_add_overflow(ways[d], ways[d - weight], &ways[d])) {
          throw ArithmeticOverflow("class count overflows 64 bits");
        }
      }
    };
    std::size_t const r = static_cast<std::size_t>(rank);
    for (std::size_t t = 0; t < r * (r - 1) / 2; ++t) {
      add_part(2);
    }
    for (std::size_t t = 0; t < r; ++t) {
      add_part(1);
    }
    return ways[length];
  }

  ////////////////////////////////////////////////////////////////////////
  // Boxplus identities
  ////////////////////////////////////////////////////////////////////////

  bool boxplus_admissible(int rank, BoxplusVariant variant, BoxplusIndices const& ix) {
    auto in_range = [rank](int x) { return 1 <= x && x <= rank; };
    auto const [i, j, k, l, m] = ix;
    switch (variant) {
      case BoxplusVariant::v22:
        return in_range(i) && in_range(l) && i > j && j >= k && k > l;
      case BoxplusVariant::v23:
        return in_range(i) && in_range(l) && k == j + 1 && i >= k && j >= m && m > l;
      case BoxplusVariant::v32:
        return in_range(i) && in_range(l) && k == j + 1 && i > m && m >= k && j >= l;
    }
    return false;
  }

  std::vector<BoxplusIndices> boxplus_tuples(int rank, BoxplusVariant variant) {
    std::vector<BoxplusIndices> out;
    for (int i = 1; i <= rank; ++i) {
      for (int j = 1; j <= rank; ++j) {
        for (int k = 1; k <= rank; ++k) {
          for (int l = 1; l <= rank; ++l) {
            if (variant == BoxplusVariant::v22) {
              BoxplusIndices ix{i, j, k, l, 0};
              if (boxplus_admissible(rank, variant, ix)) {
                out.push_back(ix);
              }
              continue;
            }
            for (int m = 1; m <= rank; ++m) {
              BoxplusIndices ix{i, j, k, l, m};
              if (boxplus_admissible(rank, variant, ix)) {
                out.push_back(ix);
              }
            }
          }
        }
      }
    }
    return out;
  }

  std::array<Word, 4> boxplus_terms(int rank, BoxplusVariant variant, BoxplusIndices const& ix, Word const& w) {
    if (!boxplus_admissible(rank, variant, ix)) {
      throw IndexConstraintViolated("indices (" + std::to_string(ix.i) + "," + std::to_string(ix.j) + ","
                                    + std::to_string(ix.k) + "," + std::to_string(ix.l) + ","
                                    + std::to_string(ix.m) + ") are not admissible");
    }
    if (w.rank() != rank) {
      throw PreconditionViolated("word rank differs from identity rank");
    }
    Word const ij{rank, {ix.i, ix.j}};
    Word const ji{rank, {ix.j, ix.i}};
    Word const kl{rank, {ix.k, ix.l}};
    Word const lk{rank, {ix.l, ix.k}};
    Word       prefix(rank);
    Word       suffix(rank);
    if (variant == BoxplusVariant::v23) {
      suffix.push_back(ix.m);
    } else if (variant == BoxplusVariant::v32) {
      prefix.push_back(ix.m);
    }
    return {prefix + ij + w + kl + suffix,
            prefix + ij + w + lk + suffix,
            prefix + ji + w + kl + suffix,
            prefix + ji + w + lk + suffix};
  }

  namespace {
    template <typename Form>
    bool same_multiset(Form const& a0, Form const& a1, Form const& b0, Form const& b1) {
      return (a0 == b0 && a1 == b1) || (a0 == b1 && a1 == b0);
    }
  }  // namespace

  bool verify_boxplus(int rank, BoxplusVariant variant, BoxplusIndices const& ix, Word const& w, std::size_t cap) {
    auto const t = boxplus_terms(rank, variant, ix, w);
    return same_multiset(to_staircase(t[0], cap),
                         to_staircase(t[3], cap),
                         to_staircase(t[1], cap),
                         to_staircase(t[2], cap));
  }

  bool verify_boxplus(Normalizer& nf, int rank, BoxplusVariant variant, BoxplusIndices const& ix, Word const& w) {
    auto const t = boxplus_terms(rank, variant, ix, w);
    // Copies: later calls may grow the normaliser's storage.
    StaircaseForm const f0 = nf(t[0]);
    StaircaseForm const f1 = nf(t[1]);
    StaircaseForm const f2 = nf(t[2]);
    StaircaseForm const f3 = nf(t[3]);
    return same_multiset(f0, f3, f1, f2);
  }

  ////////////////////////////////////////////////////////////////////////
  // First level congruences
  ////////////////////////////////////////////////////////////////////////

  CongruencePairs first_level_pairs(FirstLevelKind kind, int s, int rank) {
    validate_rank(rank);
    CongruencePairs out;
    auto commute = [&](int lo, int hi) {
      for (int x = lo; x <= hi; ++x) {
        for (int y = x + 1; y <= hi; ++y) {
          out.add(Word{rank, {y, x}}, Word{rank, {x, y}});
        }
      }
    };
    // a_x a_mid a_y = a_y a_mid a_x for x < y in [lo, hi]
    auto swap_around = [&](int mid, int lo, int hi) {
      for (int x = lo; x <= hi; ++x) {
        for (int y = x + 1; y <= hi; ++y) {
          out.add(Word{rank, {y, mid, x}}, Word{rank, {x, mid, y}});
        }
      }
    };
    if (kind == FirstLevelKind::heart) {
      if (s < 2 || s > rank - 1) {
        throw IndexConstraintViolated("heart type needs 2 <= s <= n-1, got s=" + std::to_string(s));
      }
      commute(s, rank);
      commute(1, s);
    } else {
      if (s < 2 || s > rank) {
        throw IndexConstraintViolated("diamond type needs 2 <= s <= n, got s=" + std::to_string(s));
      }
      commute(s, rank);
      swap_around(s - 1, s, rank);
      commute(1, s - 1);
      swap_around(s, 1, s - 1);
    }
    return out;
  }

}  // namespace chinese
