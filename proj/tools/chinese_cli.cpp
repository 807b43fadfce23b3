// Command-line front end. Exit status: 0 ok, 1 failed check, 2 bad input.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chinese/core.hpp"
#include "chinese/errors.hpp"
#include "chinese/harness.hpp"
#include "chinese/representation.hpp"
#include "chinese/serialize.hpp"
#include "chinese/tree.hpp"

using namespace chinese;
using json = nlohmann::ordered_json;

namespace {

  constexpr int kFormatVersion = 1;

  json versioned(json body) {
    json out{{"format", kFormatVersion}};
    for (auto& [key, value] : body.items()) {
      out[key] = std::move(value);
    }
    return out;
  }

  void print_json(json const& j) {
    std::cout << j.dump() << '\n';
  }

  Diagram leaf_by_id(int rank, std::string const& id) {
    Diagram d = Diagram::parse(rank, id);
    if (!d.is_leaf()) {
      throw NotALeaf("\"" + id + "\" is not a leaf of the diagram tree");
    }
    return d;
  }

  void print_outline(Diagram const& v, std::size_t depth) {
    std::string const indent(2 * depth, ' ');
    std::cout << indent << (v.is_root() ? std::string("root") : v.id()) << (v.is_leaf() ? "  [leaf]" : "") << '\n';
    std::string const drawing = render_ascii(v);
    std::size_t       start   = 0;
    while (start < drawing.size()) {
      std::size_t const end = drawing.find('\n', start);
      std::cout << indent << "  | " << drawing.substr(start, end - start) << '\n';
      start = end + 1;
    }
    for (Diagram const& c : v.children()) {
      print_outline(c, depth + 1);
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chinese monoid toolkit: normal forms, the diagram tree and its leaf representations"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  int         rank = 0;
  bool        as_json = false;
  std::string w_text, v_text;

  std::function<int()> action;

  // normalize
  auto* normalize = app.add_subcommand("normalize", "Staircase normal form of a word");
  normalize->add_option("-n,--rank", rank, "Rank")->required();
  normalize->add_option("word", w_text, "Word, e.g. \"3 2 1\" or \"cba\"")->required();
  normalize->add_flag("--json", as_json, "JSON output");
  normalize->callback([&] {
    action = [&] {
      StaircaseForm const f = to_staircase(parse_word(rank, w_text));
      if (as_json) {
        json body = staircase_to_json(f);
        body["word"] = f.expand().to_string();
        print_json(versioned(body));
      } else {
        std::cout << f.to_string() << '\n' << f.expand().to_string() << '\n';
      }
      return 0;
    };
  });

  // mul
  auto* mul = app.add_subcommand("mul", "Normal form of a product of two words");
  mul->add_option("-n,--rank", rank, "Rank")->required();
  mul->add_option("w", w_text, "Left factor")->required();
  mul->add_option("v", v_text, "Right factor")->required();
  mul->add_flag("--json", as_json, "JSON output");
  mul->callback([&] {
    action = [&] {
      StaircaseForm const f =
          multiply(to_staircase(parse_word(rank, w_text)), to_staircase(parse_word(rank, v_text)));
      if (as_json) {
        json body = staircase_to_json(f);
        body["word"] = f.expand().to_string();
        print_json(versioned(body));
      } else {
        std::cout << f.to_string() << '\n' << f.expand().to_string() << '\n';
      }
      return 0;
    };
  });

  // eq
  std::string method = "oracle";
  auto*       eq     = app.add_subcommand("eq", "Decide whether two words are equal in the monoid");
  eq->add_option("-n,--rank", rank, "Rank")->required();
  eq->add_option("w", w_text, "First word")->required();
  eq->add_option("v", v_text, "Second word")->required();
  eq->add_option("--method", method, "Decision procedure")
      ->check(CLI::IsMember({"oracle", "embedding", "both"}))
      ->capture_default_str();
  eq->callback([&] {
    action = [&] {
      Word const w = parse_word(rank, w_text);
      Word const v = parse_word(rank, v_text);
      bool       result;
      if (method == "oracle") {
        result = eq_oracle(w, v);
      } else if (method == "embedding") {
        result = eq_via_embedding(rank, w, v);
      } else {
        bool const oracle    = eq_oracle(w, v);
        bool const embedding = eq_via_embedding(rank, w, v);
        if (oracle != embedding) {
          std::cerr << "error: oracle says " << (oracle ? "true" : "false") << ", embedding says "
                    << (embedding ? "true" : "false") << " for \"" << w.to_string() << "\" and \""
                    << v.to_string() << "\"\n";
          return 1;
        }
        result = oracle;
      }
      std::cout << (result ? "true" : "false") << '\n';
      return 0;
    };
  });

  // tree
  bool        dot = false, ascii = false;
  std::string vertex;
  auto*       tree = app.add_subcommand("tree", "Print the diagram tree");
  tree->add_option("-n,--rank", rank, "Rank (at least 3)")->required();
  auto* dot_flag   = tree->add_flag("--dot", dot, "Graphviz output");
  auto* ascii_flag = tree->add_flag("--ascii", ascii, "Indented outline with drawings (default)");
  dot_flag->excludes(ascii_flag);
  tree->add_option("--vertex", vertex, "Render only the subtree below this vertex id");
  tree->callback([&] {
    action = [&] {
      Diagram const top = vertex.empty() ? Diagram::root(rank) : Diagram::parse(rank, vertex);
      if (dot) {
        std::cout << render_dot(top);
      } else {
        print_outline(top, 0);
      }
      return 0;
    };
  });

  // leaves
  auto* leaves = app.add_subcommand("leaves", "List the leaves of the diagram tree");
  leaves->add_option("-n,--rank", rank, "Rank (at least 3)")->required();
  leaves->add_flag("--json", as_json, "JSON output");
  leaves->callback([&] {
    action = [&] {
      auto const list = enumerate_leaves(rank);
      if (as_json) {
        print_json(versioned(leaves_to_json(rank, list)));
      } else {
        for (auto const& d : list) {
          std::cout << d.id() << "\tc=" << d.c() << "\td=" << d.d() << '\n';
        }
      }
      return 0;
    };
  });

  // repr
  std::string leaf_id;
  auto*       repr = app.add_subcommand("repr", "Generator images of a leaf representation");
  repr->add_option("-n,--rank", rank, "Rank (at least 3)")->required();
  repr->add_option("--leaf", leaf_id, "Leaf id, e.g. \"d2 A\"")->required();
  repr->add_flag("--json", as_json, "JSON output");
  repr->callback([&] {
    action = [&] {
      auto const rep = build_representation(leaf_by_id(rank, leaf_id));
      if (as_json) {
        print_json(versioned(representation_to_json(rep)));
        return 0;
      }
      std::cout << "leaf: " << rep.id() << '\n' << "schema:";
      for (auto const& comp : rep.schema().components) {
        std::cout << ' ' << kind_letter(comp.kind) << '[' << comp.origin << ']';
      }
      std::cout << '\n';
      for (int g = 1; g <= rank; ++g) {
        std::cout << 'a' << g << "\t" << rep.generator_image(g).to_string() << '\n';
      }
      return 0;
    };
  });

  // image
  auto* image = app.add_subcommand("image", "Image of a word under a leaf representation");
  image->add_option("-n,--rank", rank, "Rank (at least 3)")->required();
  image->add_option("--leaf", leaf_id, "Leaf id")->required();
  image->add_option("word", w_text, "Word")->required();
  image->add_flag("--json", as_json, "JSON output");
  image->callback([&] {
    action = [&] {
      auto const rep = build_representation(leaf_by_id(rank, leaf_id));
      auto const img = rep.image(parse_word(rank, w_text));
      if (as_json) {
        print_json(versioned({{"leaf", rep.id()}, {"image", image_to_json(img)}}));
      } else {
        std::cout << img.to_string() << '\n';
      }
      return 0;
    };
  });

  // witness
  std::string leaf1, leaf2;
  std::size_t max_len = 6;
  auto*       witness = app.add_subcommand("witness", "Words equal under one leaf but not under another");
  witness->add_option("-n,--rank", rank, "Rank (at least 3)")->required();
  witness->add_option("--leaf1", leaf1, "Leaf whose images agree")->required();
  witness->add_option("--leaf2", leaf2, "Leaf whose images differ")->required();
  witness->add_option("--max-len", max_len, "Longest word searched")->capture_default_str();
  witness->add_flag("--json", as_json, "JSON output");
  witness->callback([&] {
    action = [&] {
      auto const r1    = build_representation(leaf_by_id(rank, leaf1));
      auto const r2    = build_representation(leaf_by_id(rank, leaf2));
      auto const found = incomparability_witness(r1, r2, max_len);
      if (as_json) {
        json body{{"leaf1", r1.id()}, {"leaf2", r2.id()}, {"max_len", max_len}, {"found", found.has_value()}};
        if (found) {
          body["w"] = found->first.to_string();
          body["v"] = found->second.to_string();
        }
        print_json(versioned(body));
      } else if (found) {
        std::cout << found->first.to_string() << '\n' << found->second.to_string() << '\n';
      } else {
        std::cout << "not found\n";
      }
      return 0;
    };
  });

  // verify
  std::string suite;
  std::size_t seed = 1, cap = kDefaultClassCap, max_length = 0, samples = 0;
  int         suite_rank = 0;
  bool        inject_fault = false, timing = false;
  auto*       verify = app.add_subcommand("verify", "Run a verification suite, or \"all\"");
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--seed", seed, "Seed for random suites")->capture_default_str();
  verify->add_option("-n,--rank", suite_rank, "Rank bound or single rank, depending on the suite");
  verify->add_option("--max-len", max_length, "Word length bound");
  verify->add_option("--samples", samples, "Sample count for random suites");
  verify->add_option("--cap", cap, "Congruence class size cap")->capture_default_str();
  verify->add_flag("--inject-fault", inject_fault, "Corrupt one generator image (self-test)");
  verify->add_flag("--json", as_json, "JSON lines, one object per suite");
  verify->add_flag("--timing", timing, "Include elapsed time");
  verify->callback([&] {
    action = [&] {
      SuiteParams params;
      if (verify->count("--rank") != 0) {
        params.rank = suite_rank;
      }
      if (verify->count("--max-len") != 0) {
        params.max_length = max_length;
      }
      if (verify->count("--samples") != 0) {
        params.samples = samples;
      }
      params.seed         = seed;
      params.cap          = cap;
      params.inject_fault = inject_fault;

      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else {
        names.push_back(suite);
      }
      // Validate the names before running anything.
      for (auto const& name : names) {
        if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
          throw UnknownSuite("unknown suite \"" + name + "\"");
        }
      }
      bool all_passed = true;
      for (auto const& name : names) {
        SuiteReport const report = run_suite(name, params);
        all_passed               = all_passed && report.passed();
        if (as_json) {
          print_json(versioned(report.to_json(timing)));
        } else {
          std::cout << report.to_text();
          if (timing) {
            std::cout << "  elapsed " << report.elapsed_seconds << " s\n";
          }
        }
      }
      return all_passed ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
