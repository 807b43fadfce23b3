#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chinese/bicyclic.hpp"
#include "chinese/tree.hpp"
#include "chinese/word.hpp"

namespace chinese {

  // Additive exponent in a factor N.
  struct NatExp {
    std::uint64_t value = 0;
    friend bool operator==(NatExp const&, NatExp const&) = default;
    friend auto operator<=>(NatExp const&, NatExp const&) = default;
  };

  // Additive exponent in a factor Z.
  struct IntExp {
    std::int64_t value = 0;
    friend bool operator==(IntExp const&, IntExp const&) = default;
    friend auto operator<=>(IntExp const&, IntExp const&) = default;
  };

  using ComponentValue = std::variant<NatExp, Bicyclic, IntExp>;

  enum class FactorKind : std::uint8_t { nat, bicyclic, integer };

  char kind_letter(FactorKind kind) noexcept;

  struct Component {
    FactorKind kind;
    // "dot a2", "arc a3 a1" or "free a4"
    std::string origin;
    // Index of the creating step, or nullopt for free generators.
    std::optional<std::size_t> step;
  };

  // Components in step order, then one N factor per unused generator in
  // ascending order. Arcs contribute an adjacent (B, Z) pair.
  struct ComponentSchema {
    std::vector<Component> components;

    std::size_t c() const noexcept;
    std::size_t d() const noexcept;
    std::size_t size() const noexcept {
      return components.size();
    }
  };

  // Element of N^c x (B x Z)^d laid out by a schema.
  class ImageTuple {
   public:
    ImageTuple() = default;
    explicit ImageTuple(ComponentSchema const& schema);

    std::vector<ComponentValue> const& values() const noexcept {
      return _values;
    }
    std::vector<ComponentValue>& values() noexcept {
      return _values;
    }
    std::size_t size() const noexcept {
      return _values.size();
    }
    ComponentValue const& operator[](std::size_t i) const {
      return _values[i];
    }

    bool is_identity() const noexcept;

    // Componentwise product; the layouts must agree.
    ImageTuple& operator*=(ImageTuple const& other);
    friend ImageTuple operator*(ImageTuple lhs, ImageTuple const& rhs) {
      lhs *= rhs;
      return lhs;
    }

    // "(N:1, B:p^1q^0, Z:1)"
    std::string to_string() const;

    friend bool operator==(ImageTuple const&, ImageTuple const&) = default;
    friend auto operator<=>(ImageTuple const& a, ImageTuple const& b) {
      return a._values <=> b._values;
    }

   private:
    std::vector<ComponentValue> _values;
  };

  // The homomorphism M -> N^c x (B x Z)^d attached to a leaf of D.
  class LeafRepresentation {
   public:
    Diagram const& leaf() const noexcept {
      return _leaf;
    }
    std::string id() const {
      return _leaf.id();
    }
    int rank() const noexcept {
      return _leaf.rank();
    }
    ComponentSchema const& schema() const noexcept {
      return _schema;
    }
    ImageTuple const& generator_image(int g) const;

    // Index of the first component created by step `step`.
    std::size_t component_of_step(std::size_t step) const;

    ImageTuple identity() const {
      return ImageTuple(_schema);
    }
    ImageTuple image(Word const& w) const;

    // Overwrites one generator image. Only the harness self-test uses this,
    // to check that faithfulness catches a broken table.
    void corrupt_generator_image(int g, ImageTuple replacement);

    friend LeafRepresentation build_representation(Diagram const& leaf);

   private:
    explicit LeafRepresentation(Diagram leaf) : _leaf(std::move(leaf)) {}

    Diagram                  _leaf;
    ComponentSchema          _schema;
    std::vector<ImageTuple>  _images;  // index g - 1
    std::vector<std::size_t> _step_component;
  };

  // Throws NotALeaf for internal vertices.
  LeafRepresentation build_representation(Diagram const& leaf);

  inline ImageTuple image(LeafRepresentation const& r, Word const& w) {
    return r.image(w);
  }

  // image(r, a_y a_x) for the arc created by step `step` of r's leaf.
  ImageTuple arc_element_image(LeafRepresentation const& r, std::size_t step);

  // Product of all leaf representations of one rank.
  class Embedding {
   public:
    explicit Embedding(int rank);

    int rank() const noexcept {
      return _rank;
    }
    std::vector<LeafRepresentation> const& representations() const noexcept {
      return _reps;
    }
    std::vector<LeafRepresentation>& representations() noexcept {
      return _reps;
    }

    std::vector<ImageTuple> image(Word const& w) const;
    bool                    equal(Word const& w, Word const& v) const;

   private:
    int                             _rank;
    std::vector<LeafRepresentation> _reps;
  };

  // Decides w = v in M through the images under every leaf representation.
  bool eq_via_embedding(int rank, Word const& w, Word const& v);

  // First pair (w, v), w < v in (length, lex) order, with equal images under
  // r1 and different images under r2, over words of length <= max_length.
  std::optional<std::pair<Word, Word>> incomparability_witness(LeafRepresentation const& r1,
                                                               LeafRepresentation const& r2,
                                                               std::size_t               max_length);

}  // namespace chinese
