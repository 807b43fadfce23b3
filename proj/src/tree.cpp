#include "chinese/tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "chinese/bicyclic.hpp"
#include "chinese/errors.hpp"
#include "chinese/word.hpp"

namespace chinese {

  std::string Step::token() const {
    switch (kind) {
      case StepKind::initial_dot:
        return "d" + std::to_string(s);
      case StepKind::initial_arc:
        return "a" + std::to_string(s);
      case StepKind::arc_above:
        return "A";
      case StepKind::dot_left:
        return "L";
      case StepKind::dot_right:
        return "R";
    }
    return "?";
  }

  Diagram Diagram::root(int rank) {
    validate_rank(rank);
    if (rank < 3) {
      throw RankTooSmall("the diagram tree needs rank n >= 3, got " + std::to_string(rank));
    }
    return Diagram(rank);
  }

  bool Diagram::is_leaf() const noexcept {
    if (_steps.empty() || !_steps.back().is_arc()) {
      return false;
    }
    return _u == 1 || _v == _rank;
  }

  std::optional<std::pair<int, int>> Diagram::used_interval() const noexcept {
    if (_steps.empty()) {
      return std::nullopt;
    }
    return std::pair{_u, _v};
  }

  std::vector<Step> Diagram::legal_steps() const {
    std::vector<Step> out;
    if (_steps.empty()) {
      for (int s = 2; s <= _rank - 1; ++s) {
        out.push_back({StepKind::initial_dot, s});
      }
      for (int s = 2; s <= _rank; ++s) {
        out.push_back({StepKind::initial_arc, s});
      }
      return out;
    }
    if (is_leaf()) {
      return out;
    }
    out.push_back({StepKind::arc_above, 0});
    StepKind const last = _steps.back().kind;
    if (last == StepKind::initial_dot) {
      return out;
    }
    bool const after_arc = _steps.back().is_arc();
    if ((after_arc || last == StepKind::dot_left) && _u - 1 >= 2) {
      out.push_back({StepKind::dot_left, 0});
    }
    if ((after_arc || last == StepKind::dot_right) && _v + 1 <= _rank - 1) {
      out.push_back({StepKind::dot_right, 0});
    }
    return out;
  }

  void Diagram::apply(Step step) {
    if (step.kind != StepKind::initial_dot && step.kind != StepKind::initial_arc) {
      step.s = 0;
    }
    auto legal = legal_steps();
    if (std::find(legal.begin(), legal.end(), step) == legal.end()) {
      std::string here = _steps.empty() ? std::string("the root") : "\"" + id() + "\"";
      throw MalformedDiagram("step " + step.token() + " is not allowed after " + here + " (n="
                             + std::to_string(_rank) + ")");
    }
    switch (step.kind) {
      case StepKind::initial_dot:
        _u = _v = step.s;
        break;
      case StepKind::initial_arc:
        _u = step.s - 1;
        _v = step.s;
        break;
      case StepKind::arc_above:
        --_u;
        ++_v;
        break;
      case StepKind::dot_left:
        --_u;
        break;
      case StepKind::dot_right:
        ++_v;
        break;
    }
    _steps.push_back(step);
  }

  Diagram Diagram::child(Step step) const {
    Diagram next = *this;
    next.apply(step);
    return next;
  }

  std::vector<Diagram> Diagram::children() const {
    std::vector<Diagram> out;
    for (Step step : legal_steps()) {
      out.push_back(child(step));
    }
    return out;
  }

  std::vector<StepPlacement> Diagram::placements() const {
    std::vector<StepPlacement> out;
    int                        u = 0;
    int                        v = 0;
    for (Step step : _steps) {
      switch (step.kind) {
        case StepKind::initial_dot:
          u = v = step.s;
          out.push_back({step, step.s, step.s});
          break;
        case StepKind::initial_arc:
          u = step.s - 1;
          v = step.s;
          out.push_back({step, u, v});
          break;
        case StepKind::arc_above:
          --u;
          ++v;
          out.push_back({step, u, v});
          break;
        case StepKind::dot_left:
          --u;
          out.push_back({step, u, u});
          break;
        case StepKind::dot_right:
          ++v;
          out.push_back({step, v, v});
          break;
      }
    }
    return out;
  }

  std::size_t Diagram::dot_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(_steps.begin(), _steps.end(), [](Step const& s) { return s.is_dot(); }));
  }

  std::size_t Diagram::arc_count() const noexcept {
    return _steps.size() - dot_count();
  }

  std::size_t Diagram::unused_count() const noexcept {
    if (_steps.empty()) {
      return static_cast<std::size_t>(_rank);
    }
    return static_cast<std::size_t>(_rank - (_v - _u + 1));
  }

  std::string Diagram::id() const {
    std::string out;
    for (Step const& step : _steps) {
      if (!out.empty()) {
        out += ' ';
      }
      out += step.token();
    }
    return out;
  }

  Diagram Diagram::parse(int rank, std::string_view id) {
    Diagram            d = root(rank);
    std::istringstream in{std::string(id)};
    std::string        token;
    bool               first = true;
    while (in >> token) {
      Step step{StepKind::arc_above, 0};
      if (first) {
        if (token.size() < 2 || (token[0] != 'd' && token[0] != 'a')) {
          throw MalformedDiagram("diagram id must start with d<s> or a<s>, got \"" + token + "\"");
        }
        int s = 0;
        try {
          std::size_t used = 0;
          s                = std::stoi(token.substr(1), &used);
          if (used != token.size() - 1) {
            throw std::invalid_argument(token);
          }
        } catch (std::exception const&) {
          throw MalformedDiagram("bad initial token \"" + token + "\"");
        }
        step = {token[0] == 'd' ? StepKind::initial_dot : StepKind::initial_arc, s};
        first = false;
      } else if (token == "A") {
        step = {StepKind::arc_above, 0};
      } else if (token == "L") {
        step = {StepKind::dot_left, 0};
      } else if (token == "R") {
        step = {StepKind::dot_right, 0};
      } else {
        throw MalformedDiagram("unknown diagram token \"" + token + "\"");
      }
      d.apply(step);
    }
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration and counting
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void walk(Diagram const& d, std::function<void(Diagram const&)> const& visit) {
      visit(d);
      for (Diagram const& c : d.children()) {
        walk(c, visit);
      }
    }
  }  // namespace

  std::vector<Diagram> enumerate_leaves(int rank) {
    std::vector<Diagram> out;
    walk(Diagram::root(rank), [&](Diagram const& d) {
      if (d.is_leaf()) {
        out.push_back(d);
      }
    });
    return out;
  }

  std::vector<Diagram> enumerate_vertices(int rank) {
    std::vector<Diagram> out;
    walk(Diagram::root(rank), [&](Diagram const& d) { out.push_back(d); });
    return out;
  }

  std::uint64_t tribonacci(std::size_t n) {
    std::uint64_t a = 1, b = 1, c = 1;
    if (n <= 2) {
      return 1;
    }
    for (std::size_t i = 3; i <= n; ++i) {
      std::uint64_t const next = checked_add(checked_add(a, b), c);
      a                        = b;
      b                        = c;
      c                        = next;
    }
    return c;
  }

  std::uint64_t u_sequence(std::size_t k) {
    // U_k = U_{k-2} + 2 (U_0 + ... + U_{k-3}) for k >= 3
    std::vector<std::uint64_t> u{1, 1, 1};
    std::uint64_t              prefix = 0;  // U_0 + ... + U_{t-3}
    for (std::size_t t = 3; t <= k; ++t) {
      prefix = checked_add(prefix, u[t - 3]);
      u.push_back(checked_add(u[t - 2], checked_add(prefix, prefix)));
    }
    return u[k];
  }

  std::uint64_t leaf_count_from_u(std::size_t n) {
    if (n < 3) {
      throw RankTooSmall("leaf counts are defined for n >= 3");
    }
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k + 3 <= n; ++k) {
      sum = checked_add(sum, u_sequence(k));
    }
    return checked_add(u_sequence(n - 2), checked_add(sum, sum));
  }

  ////////////////////////////////////////////////////////////////////////
  // Rendering
  ////////////////////////////////////////////////////////////////////////

  std::string render_ascii(Diagram const& d) {
    int const  n = d.rank();
    auto const places = d.placements();

    std::vector<StepPlacement> arcs;
    std::vector<char>          used(static_cast<std::size_t>(n + 1), 0);
    for (auto const& p : places) {
      used[static_cast<std::size_t>(p.x)] = 1;
      used[static_cast<std::size_t>(p.y)] = 1;
      if (p.step.is_arc()) {
        arcs.push_back(p);
      }
    }
    // Arcs nest, so later arcs are wider: draw them first.
    std::reverse(arcs.begin(), arcs.end());

    std::string out;
    for (auto const& arc : arcs) {
      std::string line(static_cast<std::size_t>(2 * (arc.y - 1) + 1), ' ');
      for (int col = 2 * (arc.x - 1); col <= 2 * (arc.y - 1); ++col) {
        line[static_cast<std::size_t>(col)] = '-';
      }
      line[static_cast<std::size_t>(2 * (arc.x - 1))] = '+';
      line[static_cast<std::size_t>(2 * (arc.y - 1))] = '+';
      out += line + '\n';
    }
    for (int g = 1; g <= n; ++g) {
      if (g != 1) {
        out += ' ';
      }
      out += used[static_cast<std::size_t>(g)] ? '*' : 'o';
    }
    out += '\n';
    return out;
  }

  Diagram Diagram::from_ascii(int rank, std::string_view drawing) {
    std::vector<std::string> lines;
    {
      std::istringstream in{std::string(drawing)};
      std::string        line;
      while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) {
          line.pop_back();
        }
        if (!line.empty()) {
          lines.push_back(line);
        }
      }
    }
    if (lines.empty()) {
      throw MalformedDiagram("empty drawing");
    }
    std::string const& bottom = lines.back();
    if (bottom.size() != static_cast<std::size_t>(2 * rank - 1)) {
      throw MalformedDiagram("generator row does not have " + std::to_string(rank) + " cells");
    }
    std::vector<char> used(static_cast<std::size_t>(rank + 2), 0);
    for (int g = 1; g <= rank; ++g) {
      char const c = bottom[static_cast<std::size_t>(2 * (g - 1))];
      if (c != '*' && c != 'o') {
        throw MalformedDiagram("generator cells must be 'o' or '*'");
      }
      used[static_cast<std::size_t>(g)] = c == '*';
    }
    std::map<int, int> partner;
    for (std::size_t r = 0; r + 1 < lines.size(); ++r) {
      std::string const& line  = lines[r];
      auto const         left  = line.find('+');
      auto const         right = line.rfind('+');
      if (left == std::string::npos || left == right || left % 2 != 0 || right % 2 != 0) {
        throw MalformedDiagram("malformed arc row \"" + line + "\"");
      }
      int const x = static_cast<int>(left / 2) + 1;
      int const y = static_cast<int>(right / 2) + 1;
      if (y > rank || partner.contains(x) || partner.contains(y)) {
        throw MalformedDiagram("malformed arc row \"" + line + "\"");
      }
      partner[x] = y;
      partner[y] = x;
    }

    int u = rank + 1;
    int v = 0;
    for (int g = 1; g <= rank; ++g) {
      if (used[static_cast<std::size_t>(g)]) {
        u = std::min(u, g);
        v = std::max(v, g);
      }
    }
    if (v == 0) {
      return root(rank);
    }
    for (int g = u; g <= v; ++g) {
      if (!used[static_cast<std::size_t>(g)]) {
        throw MalformedDiagram("used generators are not contiguous");
      }
    }
    for (auto const& [g, h] : partner) {
      if (!used[static_cast<std::size_t>(g)]) {
        throw MalformedDiagram("arc ends on an unused generator");
      }
    }

    // Peel from the outside in; the order of construction is forced.
    std::vector<Step> reversed;
    auto is_arc = [&](int a, int b) {
      auto it = partner.find(a);
      return it != partner.end() && it->second == b;
    };
    auto is_dot = [&](int g) { return !partner.contains(g); };
    while (true) {
      if (u == v && is_dot(u)) {
        reversed.push_back({StepKind::initial_dot, u});
        break;
      }
      if (v == u + 1 && is_arc(u, v)) {
        reversed.push_back({StepKind::initial_arc, v});
        break;
      }
      if (is_arc(u, v)) {
        reversed.push_back({StepKind::arc_above, 0});
        ++u;
        --v;
      } else if (is_dot(u)) {
        reversed.push_back({StepKind::dot_left, 0});
        ++u;
      } else if (is_dot(v)) {
        reversed.push_back({StepKind::dot_right, 0});
        --v;
      } else {
        throw MalformedDiagram("drawing is not a vertex of the diagram tree");
      }
      if (u > v) {
        throw MalformedDiagram("drawing is not a vertex of the diagram tree");
      }
    }
    Diagram d = root(rank);
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) {
      d.apply(*it);
    }
    return d;
  }

  std::string render_dot(Diagram const& d) {
    std::ostringstream out;
    out << "digraph D {\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    std::size_t                                               next_id = 0;
    std::function<std::size_t(Diagram const&)> emit = [&](Diagram const& v) {
      std::size_t const me    = next_id++;
      std::string const label = v.is_root() ? std::string("root") : v.id();
      out << "  n" << me << " [label=\"" << label << "\"";
      if (v.is_leaf()) {
        out << ", peripheries=2";
      }
      out << "];\n";
      for (Diagram const& c : v.children()) {
        std::size_t const child_id = emit(c);
        out << "  n" << me << " -> n" << child_id << ";\n";
      }
      return me;
    };
    emit(d);
    out << "}\n";
    return out.str();
  }

  std::string render(Diagram const& d, RenderFormat format) {
    return format == RenderFormat::ascii ? render_ascii(d) : render_dot(d);
  }

}  // namespace chinese
