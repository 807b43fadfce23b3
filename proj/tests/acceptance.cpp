// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "chinese/harness.hpp"
#include "chinese/tree.hpp"

using namespace chinese;

namespace {

  struct Outcome {
    bool        ok = false;
    std::string detail;
  };

  Outcome from_report(SuiteReport const& r) {
    std::string detail = std::to_string(r.instances) + " checks, " + std::to_string(r.failures.size()) + " failures";
    if (!r.failures.empty()) {
      detail += "; first: " + r.failures.front();
    }
    return {r.passed(), detail};
  }

  SuiteParams params(std::optional<int> rank, std::optional<std::size_t> len, std::optional<std::size_t> samples = {}) {
    SuiteParams p;
    p.rank       = rank;
    p.max_length = len;
    p.samples    = samples;
    return p;
  }

}  // namespace

int main() {
  struct Criterion {
    int                      number;
    std::string              title;
    double                   limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
  };

  std::vector<Criterion> const criteria{
      {1, "leaf counts equal Tribonacci for n=3..12", 5,
       [] {
         std::vector<std::size_t> const expected{3, 5, 9, 17, 31, 57, 105, 193, 355, 653};
         std::string                    seen;
         bool                           ok = true;
         for (int n = 3; n <= 12; ++n) {
           std::size_t const count = enumerate_leaves(n).size();
           ok                      = ok && count == expected[static_cast<std::size_t>(n - 3)];
           seen += (n == 3 ? "" : ",") + std::to_string(count);
         }
         return Outcome{ok, "counts " + seen};
       }},
      {2, "unique staircase member per class (n=3 L<=5, n=4 L<=4)", 30,
       [] { return from_report(run_suite("uniqueness")); }},
      {3, "oracle equality iff embedding equality (n=3 L<=5, n=4 L<=4)", 60,
       [] { return from_report(run_suite("faithfulness")); }},
      {4, "boxplus identities (22),(23),(32) for n<=5, |w|<=3", 60,
       [] { return from_report(run_suite("boxplus", params(5, 3))); }},
      {5, "Adjan identity on 200 seeded pairs, |x|,|y|<=4, n<=5", 0,
       [] { return from_report(run_suite("identity", params(5, 4, 200))); }},
      {6, "arc element images for every leaf with n<=6", 0,
       [] { return from_report(run_suite("arcs", params(6, 4))); }},
      {7, "c+2d=n per leaf and sum n*T_n for n<=10", 0,
       [] { return from_report(run_suite("schema", params(10, {}))); }},
      {8, "incomparability witnesses for n=4 within length 6", 0,
       [] {
         SuiteReport const r = run_suite("incomparability", params(4, 6));
         Outcome           o = from_report(r);
         o.ok                = o.ok && r.inconclusive == 0 && r.instances == 20;
         o.detail += ", " + std::to_string(r.inconclusive) + " inconclusive";
         return o;
       }},
      {9, "first level elements central for n<=4, |w|<=4", 0,
       [] { return from_report(run_suite("centrality", params(4, 4))); }},
  };

  bool all = true;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && elapsed >= c.limit_seconds) {
      o.ok = false;
      o.detail += ", over the time limit";
    }
    all = all && o.ok;
    std::printf("criterion %d: %s  %s (%s; %.2f s", c.number, o.ok ? "PASS" : "FAIL", c.title.c_str(),
                o.detail.c_str(), elapsed);
    if (c.limit_seconds > 0) {
      std::printf(", limit %.0f s", c.limit_seconds);
    }
    std::printf(")\n");
  }
  return all ? 0 : 1;
}
