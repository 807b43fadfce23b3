#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chinese {

  enum class StepKind : std::uint8_t {
    initial_dot,  // d<s>, 2 <= s <= n-1
    initial_arc,  // a<s>, joins a_{s-1} and a_s, 2 <= s <= n
    arc_above,    // A, joins the two neighbours of the used interval
    dot_left,     // L, dot on a_{u-1}
    dot_right     // R, dot on a_{v+1}
  };

  struct Step {
    StepKind kind;
    int      s = 0;  // only meaningful for the initial steps

    bool is_arc() const noexcept {
      return kind == StepKind::initial_arc || kind == StepKind::arc_above;
    }
    bool is_dot() const noexcept {
      return !is_arc();
    }
    std::string token() const;

    friend bool operator==(Step const&, Step const&) = default;
  };

  // Generators touched by one step: a single dot, or the pair (x, y) of an
  // arc with x < y.
  struct StepPlacement {
    Step step;
    int  x = 0;
    int  y = 0;  // equal to x for dots
  };

  // Vertex of the tree D. Built only through root(), child() or parse, which
  // validate every step, so a Diagram object is always a vertex of D.
  class Diagram {
   public:
    static Diagram root(int rank);
    // "d2 A", "a3 L L". The empty string is the root.
    static Diagram parse(int rank, std::string_view id);
    // Reads back the drawing produced by render_ascii.
    static Diagram from_ascii(int rank, std::string_view drawing);

    int rank() const noexcept {
      return _rank;
    }
    std::vector<Step> const& steps() const noexcept {
      return _steps;
    }
    bool is_root() const noexcept {
      return _steps.empty();
    }
    bool is_leaf() const noexcept;

    // Used interval [u, v]; nullopt at the root.
    std::optional<std::pair<int, int>> used_interval() const noexcept;

    std::vector<StepPlacement> placements() const;

    // Legal next steps in the fixed order A, L, R (root: d2..d_{n-1}, a2..a_n).
    std::vector<Step>    legal_steps() const;
    Diagram              child(Step step) const;
    std::vector<Diagram> children() const;

    std::size_t dot_count() const noexcept;
    std::size_t arc_count() const noexcept;
    std::size_t unused_count() const noexcept;

    // Number of N factors (dots plus unused generators) and of B x Z pairs.
    std::size_t c() const noexcept {
      return dot_count() + unused_count();
    }
    std::size_t d() const noexcept {
      return arc_count();
    }

    std::string id() const;

    friend bool operator==(Diagram const& a, Diagram const& b) {
      return a._rank == b._rank && a._steps == b._steps;
    }

   private:
    explicit Diagram(int rank) : _rank(rank) {}
    void apply(Step step);

    int               _rank;
    std::vector<Step> _steps;
    int               _u = 0;
    int               _v = 0;
  };

  std::vector<Diagram> enumerate_leaves(int rank);
  // Every vertex of D in depth-first pre-order.
  std::vector<Diagram> enumerate_vertices(int rank);

  std::uint64_t tribonacci(std::size_t n);
  std::uint64_t u_sequence(std::size_t k);
  // Leaf count from U: U_{n-2} + 2 (U_0 + ... + U_{n-3}).
  std::uint64_t leaf_count_from_u(std::size_t n);

  enum class RenderFormat { ascii, dot };

  std::string render(Diagram const& d, RenderFormat format);
  // Arc rows, outermost first, above a row of generators: 'o' unused, '*' used.
  std::string render_ascii(Diagram const& d);
  // Graphviz description of the subtree rooted at d.
  std::string render_dot(Diagram const& d);

}  // namespace chinese
