#include "chinese/harness.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "chinese/errors.hpp"
#include "chinese/representation.hpp"
#include "chinese/tree.hpp"

namespace chinese {

  namespace {

    constexpr std::size_t kMaxRecordedFailures = 100;
    // Class cap used when the identity suite cross-checks with the oracle.
    constexpr std::size_t kIdentityCrossCheckCap = 20'000;

    class Recorder {
     public:
      explicit Recorder(SuiteReport& report) : _report(report) {}
      ~Recorder() {
        if (_dropped != 0) {
          _report.failures.push_back("(" + std::to_string(_dropped) + " further failures not shown)");
        }
      }
      void check(bool ok, std::function<std::string()> const& describe) {
        ++_report.instances;
        if (ok) {
          return;
        }
        if (_report.failures.size() < kMaxRecordedFailures) {
          _report.failures.push_back(describe());
        } else {
          ++_dropped;
        }
      }

     private:
      SuiteReport& _report;
      std::size_t  _dropped = 0;
    };

    void require_bound(bool ok, std::string const& what) {
      if (!ok) {
        throw BoundsExceeded(what);
      }
    }

    std::string quoted(Word const& w) {
      return "\"" + w.to_string() + "\"";
    }

    // Class index of every word, via one breadth-first search per class.
    std::vector<std::size_t> classify(std::vector<Word> const& words, std::size_t cap) {
      std::unordered_map<Word, std::size_t, WordHash> index;
      for (std::size_t i = 0; i < words.size(); ++i) {
        index.emplace(words[i], i);
      }
      constexpr std::size_t    unassigned = static_cast<std::size_t>(-1);
      std::vector<std::size_t> cls(words.size(), unassigned);
      std::size_t              next = 0;
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (cls[i] != unassigned) {
          continue;
        }
        for (auto const& member : congruence_class(words[i], {}, cap)) {
          if (auto it = index.find(member); it != index.end()) {
            cls[it->second] = next;
          }
        }
        ++next;
      }
      return cls;
    }

    std::vector<std::pair<int, std::size_t>> default_pairs(SuiteParams const& params) {
      if (params.rank) {
        return {{*params.rank, params.max_length.value_or(*params.rank == 3 ? 5 : 4)}};
      }
      return {{3, params.max_length.value_or(5)}, {4, params.max_length.value_or(4)}};
    }

    void check_small_instance(int n, std::size_t len, std::size_t max_words) {
      require_bound(n >= 1 && n <= 6, "rank must lie in 1..6 for exhaustive word suites");
      double words = 0;
      for (std::size_t l = 0; l <= len; ++l) {
        words += std::pow(static_cast<double>(n), static_cast<double>(l));
      }
      require_bound(words <= static_cast<double>(max_words),
                    "n=" + std::to_string(n) + ", length " + std::to_string(len) + " gives more than "
                        + std::to_string(max_words) + " words");
    }

    ////////////////////////////////////////////////////////////////////////
    // Suites
    ////////////////////////////////////////////////////////////////////////

    void suite_counts(SuiteParams const& params, SuiteReport& report) {
      int const max_n = params.rank.value_or(12);
      require_bound(max_n >= 3 && max_n <= 16, "counts suite covers 3 <= n <= 16");
      Recorder rec(report);
      for (int n = 3; n <= max_n; ++n) {
        auto const          leaves = enumerate_leaves(n);
        std::uint64_t const t      = tribonacci(static_cast<std::size_t>(n));
        std::uint64_t const via_u  = leaf_count_from_u(static_cast<std::size_t>(n));
        std::size_t const   first  = Diagram::root(n).children().size();
        report.notes.push_back("n=" + std::to_string(n) + " leaves=" + std::to_string(leaves.size())
                               + " T_n=" + std::to_string(t));
        rec.check(leaves.size() == t, [&] {
          return "n=" + std::to_string(n) + ": " + std::to_string(leaves.size()) + " leaves, T_n="
                 + std::to_string(t);
        });
        rec.check(via_u == t && u_sequence(static_cast<std::size_t>(n)) == t, [&] {
          return "n=" + std::to_string(n) + ": U-recurrence disagrees with T_n";
        });
        rec.check(first == static_cast<std::size_t>(2 * n - 3), [&] {
          return "n=" + std::to_string(n) + ": first level has " + std::to_string(first) + " vertices";
        });
      }
    }

    void suite_uniqueness(SuiteParams const& params, SuiteReport& report) {
      Recorder rec(report);
      for (auto [n, len] : default_pairs(params)) {
        check_small_instance(n, len, 20'000);
        for (std::size_t l = 0; l <= len; ++l) {
          auto const                                      words = words_of_length(n, l);
          std::unordered_map<Word, std::size_t, WordHash> seen;
          std::size_t                                     classes = 0;
          for (auto const& w : words) {
            if (seen.contains(w)) {
              continue;
            }
            auto const  cls     = congruence_class(w, {}, params.cap);
            std::size_t members = 0;
            for (auto const& m : cls) {
              seen.emplace(m, classes);
              members += match_staircase(m).has_value() ? 1 : 0;
            }
            ++classes;
            rec.check(members == 1, [&] {
              return "n=" + std::to_string(n) + ": class of " + quoted(w) + " has " + std::to_string(members)
                     + " staircase members";
            });
          }
          std::uint64_t const expected = count_classes(n, l);
          rec.check(classes == expected, [&] {
            return "n=" + std::to_string(n) + ", length " + std::to_string(l) + ": " + std::to_string(classes)
                   + " classes, staircase count " + std::to_string(expected);
          });
        }
        report.notes.push_back("n=" + std::to_string(n) + " length<=" + std::to_string(len) + " done");
      }
    }

    void suite_faithfulness(SuiteParams const& params, SuiteReport& report) {
      Recorder rec(report);
      for (auto [n, len] : default_pairs(params)) {
        require_bound(n >= 3, "faithfulness needs n >= 3");
        check_small_instance(n, len, 5'000);
        auto const words = words_up_to(n, len);
        auto const cls   = classify(words, params.cap);

        Embedding emb(n);
        if (params.inject_fault) {
          auto& rep = emb.representations().front();
          rep.corrupt_generator_image(1, rep.generator_image(n));
          report.notes.push_back("fault injected: leaf \"" + rep.id() + "\" maps a1 like a"
                                 + std::to_string(n));
        }
        std::map<std::vector<ImageTuple>, std::size_t> keys;
        std::vector<std::size_t>                       key(words.size());
        for (std::size_t i = 0; i < words.size(); ++i) {
          key[i] = keys.emplace(emb.image(words[i]), keys.size()).first->second;
        }
        std::size_t discrepancies = 0;
        for (std::size_t i = 0; i < words.size(); ++i) {
          for (std::size_t j = i + 1; j < words.size(); ++j) {
            bool const oracle   = words[i].size() == words[j].size() && cls[i] == cls[j];
            bool const embedded = key[i] == key[j];
            discrepancies += oracle != embedded;
            rec.check(oracle == embedded, [&] {
              return "n=" + std::to_string(n) + ": " + quoted(words[i]) + " vs " + quoted(words[j])
                     + " oracle=" + (oracle ? "equal" : "different")
                     + " embedding=" + (embedded ? "equal" : "different");
            });
          }
        }
        report.notes.push_back("n=" + std::to_string(n) + " length<=" + std::to_string(len) + ": "
                               + std::to_string(words.size()) + " words, " + std::to_string(discrepancies)
                               + " discrepancies");
      }
    }

    void suite_boxplus(SuiteParams const& params, SuiteReport& report) {
      int const         max_n = params.rank.value_or(5);
      std::size_t const len   = params.max_length.value_or(3);
      require_bound(max_n >= 3 && max_n <= 6 && len <= 4, "boxplus suite covers n <= 6, |w| <= 4");
      Recorder rec(report);
      for (int n = 3; n <= max_n; ++n) {
        Normalizer        nf(params.cap);
        auto const        words = words_up_to(n, len);
        std::size_t const before = report.instances;
        for (auto variant : {BoxplusVariant::v22, BoxplusVariant::v23, BoxplusVariant::v32}) {
          for (auto const& ix : boxplus_tuples(n, variant)) {
            for (auto const& w : words) {
              rec.check(verify_boxplus(nf, n, variant, ix, w), [&] {
                static char const* names[] = {"22", "23", "32"};
                return "n=" + std::to_string(n) + " (" + names[static_cast<int>(variant)] + ") i="
                       + std::to_string(ix.i) + " j=" + std::to_string(ix.j) + " k=" + std::to_string(ix.k)
                       + " l=" + std::to_string(ix.l) + " m=" + std::to_string(ix.m) + " w=" + quoted(w);
              });
            }
          }
        }
        report.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(report.instances - before)
                               + " products checked");
      }
    }

    void suite_identity(SuiteParams const& params, SuiteReport& report) {
      std::size_t const samples = params.samples.value_or(200);
      std::size_t const len     = params.max_length.value_or(4);
      int const         max_n   = params.rank.value_or(5);
      require_bound(samples <= 100'000 && len >= 1 && len <= 8 && max_n >= 3 && max_n <= 7,
                    "identity suite covers samples <= 100000, 1 <= |x|,|y| <= 8, 3 <= n <= 7");
      Recorder                 rec(report);
      std::mt19937_64          rng(params.seed);
      std::map<int, Embedding> embeddings;
      std::size_t              cross_checked = 0;
      for (std::size_t t = 0; t < samples; ++t) {
        int const n          = std::uniform_int_distribution<int>(3, max_n)(rng);
        auto      random_word = [&] {
          Word        w(n);
          std::size_t l = std::uniform_int_distribution<std::size_t>(1, len)(rng);
          for (std::size_t i = 0; i < l; ++i) {
            w.push_back(std::uniform_int_distribution<int>(1, n)(rng));
          }
          return w;
        };
        Word const x    = random_word();
        Word const y    = random_word();
        Word const xyyx = x + y + y + x;
        Word const lhs  = xyyx + x + y + xyyx;
        Word const rhs  = xyyx + y + x + xyyx;
        auto const& emb = embeddings.try_emplace(n, n).first->second;
        rec.check(emb.equal(lhs, rhs), [&] {
          return "n=" + std::to_string(n) + " x=" + quoted(x) + " y=" + quoted(y) + ": embedding separates";
        });
        try {
          bool const same = eq_oracle(lhs, rhs, {}, std::min(params.cap, kIdentityCrossCheckCap));
          ++cross_checked;
          rec.check(same, [&] {
            return "n=" + std::to_string(n) + " x=" + quoted(x) + " y=" + quoted(y) + ": oracle separates";
          });
        } catch (ClassCapExceeded const&) {
          // class too large for the oracle; the embedding verdict stands alone
        }
      }
      report.notes.push_back(std::to_string(samples) + " samples, seed " + std::to_string(params.seed) + ", "
                             + std::to_string(cross_checked) + " cross-checked by the oracle");
    }

    void suite_arcs(SuiteParams const& params, SuiteReport& report) {
      int const         max_n = params.rank.value_or(6);
      std::size_t const len   = params.max_length.value_or(4);
      require_bound(max_n >= 3 && max_n <= 7 && len <= 5, "arcs suite covers n <= 7, |w| <= 5");
      Recorder rec(report);
      for (int n = 3; n <= max_n; ++n) {
        // Words for the centrality check stay small for larger ranks.
        auto const words = words_up_to(n, n <= 4 ? len : std::min<std::size_t>(len, 2));
        for (Diagram const& leaf : enumerate_leaves(n)) {
          auto const rep    = build_representation(leaf);
          auto const places = leaf.placements();
          for (std::size_t step = 0; step < places.size(); ++step) {
            if (!places[step].step.is_arc()) {
              continue;
            }
            ImageTuple const img      = arc_element_image(rep, step);
            ImageTuple       expected = rep.identity();
            expected.values()[rep.component_of_step(step) + 1] = IntExp{1};
            std::string const where = "n=" + std::to_string(n) + " leaf \"" + leaf.id() + "\" arc a"
                                      + std::to_string(places[step].y) + " a" + std::to_string(places[step].x);
            rec.check(img == expected, [&] { return where + ": image " + img.to_string(); });
            for (int g = 1; g <= n; ++g) {
              rec.check(img * rep.generator_image(g) == rep.generator_image(g) * img,
                        [&] { return where + ": does not commute with a" + std::to_string(g); });
            }
            Word arc(n);
            arc.push_back(places[step].y);
            arc.push_back(places[step].x);
            for (auto const& w : words) {
              rec.check(rep.image(arc + w) == rep.image(w + arc),
                        [&] { return where + ": not central against " + quoted(w); });
            }
          }
        }
      }
    }

    void suite_centrality(SuiteParams const& params, SuiteReport& report) {
      int const         max_n = params.rank.value_or(4);
      std::size_t const len   = params.max_length.value_or(4);
      require_bound(max_n >= 2 && max_n <= 5 && len <= 5, "centrality suite covers n <= 5, |w| <= 5");
      Recorder rec(report);
      for (int n = 2; n <= max_n; ++n) {
        auto const words = words_up_to(n, len);
        auto       run   = [&](FirstLevelKind kind, int s) {
          auto const pairs = first_level_pairs(kind, s, n);
          Word       central(n);
          if (kind == FirstLevelKind::diamond) {
            central.push_back(s);
          }
          central.push_back(kind == FirstLevelKind::heart ? s : s - 1);
          std::string const label = std::string(kind == FirstLevelKind::heart ? "heart" : "diamond") + " s="
                                    + std::to_string(s) + " n=" + std::to_string(n);
          for (auto const& w : words) {
            rec.check(eq_oracle(central + w, w + central, pairs, params.cap),
                      [&] { return label + ": " + quoted(central) + " does not commute with " + quoted(w); });
          }
        };
        for (int s = 2; s <= n - 1; ++s) {
          run(FirstLevelKind::heart, s);
        }
        for (int s = 2; s <= n; ++s) {
          run(FirstLevelKind::diamond, s);
        }
        if (n < 3) {
          continue;
        }
        // The dot of a first level dot is central in the leaf images too.
        for (Diagram const& leaf : enumerate_leaves(n)) {
          Step const first = leaf.steps().front();
          if (first.kind != StepKind::initial_dot) {
            continue;
          }
          auto const        rep = build_representation(leaf);
          ImageTuple const& a_s = rep.generator_image(first.s);
          for (int g = 1; g <= n; ++g) {
            rec.check(a_s * rep.generator_image(g) == rep.generator_image(g) * a_s, [&] {
              return "leaf \"" + leaf.id() + "\": a" + std::to_string(first.s) + " does not commute with a"
                     + std::to_string(g);
            });
          }
        }
      }
    }

    void suite_incomparability(SuiteParams const& params, SuiteReport& report) {
      int const         n   = params.rank.value_or(4);
      std::size_t const len = params.max_length.value_or(6);
      require_bound(n >= 3 && n <= 6 && len >= 1 && len <= 8, "incomparability suite covers n <= 6, length <= 8");
      Recorder   rec(report);
      auto const leaves = enumerate_leaves(n);
      std::vector<LeafRepresentation> reps;
      for (auto const& leaf : leaves) {
        reps.push_back(build_representation(leaf));
      }
      std::size_t longest = 0;
      for (std::size_t a = 0; a < reps.size(); ++a) {
        for (std::size_t b = 0; b < reps.size(); ++b) {
          if (a == b) {
            continue;
          }
          auto const found = incomparability_witness(reps[a], reps[b], len);
          if (!found) {
            ++report.inconclusive;
            report.notes.push_back("inconclusive: \"" + reps[a].id() + "\" vs \"" + reps[b].id()
                                   + "\" up to length " + std::to_string(len));
            continue;
          }
          auto const& [w, v] = *found;
          longest            = std::max(longest, w.size());
          rec.check(reps[a].image(w) == reps[a].image(v) && reps[b].image(w) != reps[b].image(v), [&] {
            return "witness " + quoted(w) + ", " + quoted(v) + " for \"" + reps[a].id() + "\" vs \""
                   + reps[b].id() + "\" does not separate";
          });
        }
      }
      report.notes.push_back(std::to_string(reps.size() * (reps.size() - 1)) + " ordered pairs, longest witness "
                             + std::to_string(longest));
    }

    void suite_schema(SuiteParams const& params, SuiteReport& report) {
      int const max_n = params.rank.value_or(10);
      require_bound(max_n >= 3 && max_n <= 14, "schema suite covers 3 <= n <= 14");
      Recorder rec(report);
      for (int n = 3; n <= max_n; ++n) {
        std::uint64_t total = 0;
        for (Diagram const& leaf : enumerate_leaves(n)) {
          auto const        rep = build_representation(leaf);
          std::size_t const c   = rep.schema().c();
          std::size_t const d   = rep.schema().d();
          total += c + 2 * d;
          rec.check(c + 2 * d == static_cast<std::size_t>(n) && c == leaf.c() && d == leaf.d(), [&] {
            return "n=" + std::to_string(n) + " leaf \"" + leaf.id() + "\": c=" + std::to_string(c)
                   + " d=" + std::to_string(d);
          });
        }
        std::uint64_t const expected = static_cast<std::uint64_t>(n) * tribonacci(static_cast<std::size_t>(n));
        rec.check(total == expected, [&] {
          return "n=" + std::to_string(n) + ": sum of c+2d is " + std::to_string(total) + ", n*T_n is "
                 + std::to_string(expected);
        });
        report.notes.push_back("n=" + std::to_string(n) + " sum(c+2d)=" + std::to_string(total));
      }
    }

    using SuiteFn = void (*)(SuiteParams const&, SuiteReport&);

    std::vector<std::pair<std::string, SuiteFn>> const& registry() {
      static std::vector<std::pair<std::string, SuiteFn>> const suites{
          {"counts", suite_counts},
          {"uniqueness", suite_uniqueness},
          {"faithfulness", suite_faithfulness},
          {"boxplus", suite_boxplus},
          {"identity", suite_identity},
          {"arcs", suite_arcs},
          {"centrality", suite_centrality},
          {"incomparability", suite_incomparability},
          {"schema", suite_schema},
      };
      return suites;
    }

  }  // namespace

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (auto const& [name, fn] : registry()) {
        out.push_back(name);
      }
      return out;
    }();
    return names;
  }

  SuiteReport run_suite(std::string const& name, SuiteParams const& params) {
    for (auto const& [suite, fn] : registry()) {
      if (suite != name) {
        continue;
      }
      SuiteReport report;
      report.name      = name;
      auto const start = std::chrono::steady_clock::now();
      fn(params, report);
      report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return report;
    }
    throw UnknownSuite("unknown suite \"" + name + "\"");
  }

  nlohmann::ordered_json SuiteReport::to_json(bool with_timing) const {
    nlohmann::ordered_json out{{"suite", name},
                               {"passed", passed()},
                               {"instances", instances},
                               {"inconclusive", inconclusive},
                               {"failures", failures},
                               {"notes", notes}};
    if (with_timing) {
      out["elapsed_s"] = elapsed_seconds;
    }
    return out;
  }

  std::string SuiteReport::to_text() const {
    std::ostringstream out;
    out << (passed() ? "[PASS] " : "[FAIL] ") << name << ": " << instances << " checks, " << failures.size()
        << " failures";
    if (inconclusive != 0) {
      out << ", " << inconclusive << " inconclusive";
    }
    out << '\n';
    for (auto const& note : notes) {
      out << "  " << note << '\n';
    }
    for (auto const& failure : failures) {
      out << "  counterexample: " << failure << '\n';
    }
    return out.str();
  }

}  // namespace chinese
