#include "chinese/representation.hpp"

#include <algorithm>
#include <map>

#include "chinese/errors.hpp"

namespace chinese {

  char kind_letter(FactorKind kind) noexcept {
    switch (kind) {
      case FactorKind::nat:
        return 'N';
      case FactorKind::bicyclic:
        return 'B';
      case FactorKind::integer:
        return 'Z';
    }
    return '?';
  }

  std::size_t ComponentSchema::c() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        components.begin(), components.end(), [](Component const& x) { return x.kind == FactorKind::nat; }));
  }

  std::size_t ComponentSchema::d() const noexcept {
    return static_cast<std::size_t>(std::count_if(components.begin(), components.end(), [](Component const& x) {
      return x.kind == FactorKind::bicyclic;
    }));
  }

  ////////////////////////////////////////////////////////////////////////
  // ImageTuple
  ////////////////////////////////////////////////////////////////////////

  ImageTuple::ImageTuple(ComponentSchema const& schema) {
    _values.reserve(schema.size());
    for (auto const& comp : schema.components) {
      switch (comp.kind) {
        case FactorKind::nat:
          _values.emplace_back(NatExp{});
          break;
        case FactorKind::bicyclic:
          _values.emplace_back(Bicyclic::identity());
          break;
        case FactorKind::integer:
          _values.emplace_back(IntExp{});
          break;
      }
    }
  }

  bool ImageTuple::is_identity() const noexcept {
    return std::all_of(_values.begin(), _values.end(), [](ComponentValue const& v) {
      return std::visit(
          [](auto const& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Bicyclic>) {
              return x.is_identity();
            } else {
              return x.value == 0;
            }
          },
          v);
    });
  }

  ImageTuple& ImageTuple::operator*=(ImageTuple const& other) {
    if (other._values.size() != _values.size()) {
      throw PreconditionViolated("image tuples of different layout");
    }
    for (std::size_t i = 0; i < _values.size(); ++i) {
      std::visit(
          [&](auto& lhs) {
            using T        = std::decay_t<decltype(lhs)>;
            auto const* rhs = std::get_if<T>(&other._values[i]);
            if (rhs == nullptr) {
              throw PreconditionViolated("image tuples of different layout");
            }
            if constexpr (std::is_same_v<T, Bicyclic>) {
              lhs = bmul(lhs, *rhs);
            } else {
              lhs.value = checked_add(lhs.value, rhs->value);
            }
          },
          _values[i]);
    }
    return *this;
  }

  std::string ImageTuple::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < _values.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      std::visit(
          [&](auto const& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Bicyclic>) {
              out += "B:" + to_compact_string(x);
            } else if constexpr (std::is_same_v<T, NatExp>) {
              out += "N:" + std::to_string(x.value);
            } else {
              out += "Z:" + std::to_string(x.value);
            }
          },
          _values[i]);
    }
    return out + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // LeafRepresentation
  ////////////////////////////////////////////////////////////////////////

  ImageTuple const& LeafRepresentation::generator_image(int g) const {
    if (g < 1 || g > rank()) {
      throw PreconditionViolated("generator index " + std::to_string(g) + " out of range");
    }
    return _images[static_cast<std::size_t>(g - 1)];
  }

  std::size_t LeafRepresentation::component_of_step(std::size_t step) const {
    if (step >= _step_component.size()) {
      throw PreconditionViolated("step index " + std::to_string(step) + " out of range");
    }
    return _step_component[step];
  }

  ImageTuple LeafRepresentation::image(Word const& w) const {
    if (w.rank() != rank()) {
      throw PreconditionViolated("word rank " + std::to_string(w.rank()) + " differs from representation rank "
                                 + std::to_string(rank()));
    }
    ImageTuple result = identity();
    for (Letter x : w.letters()) {
      result *= _images[x - 1u];
    }
    return result;
  }

  void LeafRepresentation::corrupt_generator_image(int g, ImageTuple replacement) {
    if (replacement.size() != _schema.size()) {
      throw PreconditionViolated("replacement image has the wrong layout");
    }
    _images.at(static_cast<std::size_t>(g - 1)) = std::move(replacement);
  }

  LeafRepresentation build_representation(Diagram const& leaf) {
    if (!leaf.is_leaf()) {
      throw NotALeaf("\"" + leaf.id() + "\" is not a leaf of the diagram tree");
    }
    int const          n = leaf.rank();
    LeafRepresentation rep(leaf);

    // Built column by column: columns[g - 1] collects a_g's entries.
    std::vector<std::vector<ComponentValue>> columns(static_cast<std::size_t>(n));
    std::vector<char>                        active(static_cast<std::size_t>(n + 1), 1);
    auto gen = [](int g) { return "a" + std::to_string(g); };

    auto const places = leaf.placements();
    for (std::size_t t = 0; t < places.size(); ++t) {
      auto const& place = places[t];
      rep._step_component.push_back(rep._schema.components.size());
      if (place.step.is_dot()) {
        int const s = place.x;
        rep._schema.components.push_back({FactorKind::nat, "dot " + gen(s), t});
        for (int g = 1; g <= n; ++g) {
          columns[static_cast<std::size_t>(g - 1)].emplace_back(NatExp{g == s ? 1u : 0u});
        }
        active[static_cast<std::size_t>(s)] = 0;
        continue;
      }
      int const x = place.x;
      int const y = place.y;
      rep._schema.components.push_back({FactorKind::bicyclic, "arc " + gen(y) + " " + gen(x), t});
      rep._schema.components.push_back({FactorKind::integer, "arc " + gen(y) + " " + gen(x), t});
      for (int g = 1; g <= n; ++g) {
        auto&    col = columns[static_cast<std::size_t>(g - 1)];
        Bicyclic b   = Bicyclic::identity();
        IntExp   z{0};
        if (g == x) {
          b = Bicyclic::gen_p();
          z = IntExp{1};
        } else if (g == y) {
          b = Bicyclic::gen_q();
        } else if (active[static_cast<std::size_t>(g)] && g < x) {
          b = Bicyclic::gen_p();
        } else if (active[static_cast<std::size_t>(g)] && g > y) {
          b = Bicyclic::gen_q();
        }
        col.emplace_back(b);
        col.emplace_back(z);
      }
      active[static_cast<std::size_t>(x)] = 0;
      active[static_cast<std::size_t>(y)] = 0;
    }
    // What is left is free commutative: one N factor per generator.
    for (int f = 1; f <= n; ++f) {
      if (!active[static_cast<std::size_t>(f)]) {
        continue;
      }
      rep._schema.components.push_back({FactorKind::nat, "free " + gen(f), std::nullopt});
      for (int g = 1; g <= n; ++g) {
        columns[static_cast<std::size_t>(g - 1)].emplace_back(NatExp{g == f ? 1u : 0u});
      }
    }
    rep._images.reserve(static_cast<std::size_t>(n));
    for (auto& col : columns) {
      ImageTuple img;
      img.values() = std::move(col);
      rep._images.push_back(std::move(img));
    }
    return rep;
  }

  ImageTuple arc_element_image(LeafRepresentation const& r, std::size_t step) {
    auto const places = r.leaf().placements();
    if (step >= places.size() || !places[step].step.is_arc()) {
      throw NotAnArcStep("step " + std::to_string(step) + " of \"" + r.id() + "\" is not an arc");
    }
    Word w(r.rank());
    w.push_back(places[step].y);
    w.push_back(places[step].x);
    return r.image(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // Embedding
  ////////////////////////////////////////////////////////////////////////

  Embedding::Embedding(int rank) : _rank(rank) {
    for (Diagram const& leaf : enumerate_leaves(rank)) {
      _reps.push_back(build_representation(leaf));
    }
  }

  std::vector<ImageTuple> Embedding::image(Word const& w) const {
    std::vector<ImageTuple> out;
    out.reserve(_reps.size());
    for (auto const& r : _reps) {
      out.push_back(r.image(w));
    }
    return out;
  }

  bool Embedding::equal(Word const& w, Word const& v) const {
    if (w.rank() != _rank || v.rank() != _rank) {
      throw PreconditionViolated("word rank differs from embedding rank");
    }
    return std::all_of(_reps.begin(), _reps.end(), [&](LeafRepresentation const& r) {
      return r.image(w) == r.image(v);
    });
  }

  bool eq_via_embedding(int rank, Word const& w, Word const& v) {
    return Embedding(rank).equal(w, v);
  }

  std::optional<std::pair<Word, Word>> incomparability_witness(LeafRepresentation const& r1,
                                                               LeafRepresentation const& r2,
                                                               std::size_t               max_length) {
    if (r1.rank() != r2.rank()) {
      throw PreconditionViolated("witness search needs representations of equal rank");
    }
    if (r1.leaf() == r2.leaf()) {
      throw PreconditionViolated("witness search needs two distinct leaves");
    }
    for (std::size_t len = 1; len <= max_length; ++len) {
      auto const words = words_of_length(r1.rank(), len);
      std::vector<ImageTuple> second;
      second.reserve(words.size());
      // Members of each r1-class, in lexicographic order.
      std::map<ImageTuple, std::vector<std::size_t>> groups;
      for (std::size_t i = 0; i < words.size(); ++i) {
        groups[r1.image(words[i])].push_back(i);
        second.push_back(r2.image(words[i]));
      }
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (auto const& [key, members] : groups) {
        std::size_t const w = members.front();
        for (std::size_t v : members) {
          if (second[v] != second[w]) {
            if (!best || w < best->first) {
              best = std::pair{w, v};
            }
            break;
          }
        }
      }
      if (best) {
        return std::pair{words[best->first], words[best->second]};
      }
    }
    return std::nullopt;
  }

}  // namespace chinese
