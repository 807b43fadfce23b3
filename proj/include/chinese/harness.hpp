#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "chinese/core.hpp"

namespace chinese {

  struct SuiteParams {
    // Upper rank, or the single rank for rank-specific suites. Unset means
    // the suite's documented default.
    std::optional<int>         rank;
    std::optional<std::size_t> max_length;
    std::optional<std::size_t> samples;
    std::uint64_t              seed = 1;
    std::size_t                cap  = kDefaultClassCap;
    // Corrupt one generator image before checking faithfulness.
    bool inject_fault = false;
  };

  struct SuiteReport {
    std::string              name;
    std::size_t              instances    = 0;
    std::size_t              inconclusive = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    double                   elapsed_seconds = 0;

    bool passed() const noexcept {
      return failures.empty();
    }

    // Without timing unless asked, so that reports are byte-stable.
    nlohmann::ordered_json to_json(bool with_timing = false) const;
    std::string            to_text() const;
  };

  // counts, uniqueness, faithfulness, boxplus, identity, arcs, centrality,
  // incomparability, schema
  std::vector<std::string> const& suite_names();

  // Throws UnknownSuite or BoundsExceeded.
  SuiteReport run_suite(std::string const& name, SuiteParams const& params = {});

}  // namespace chinese
