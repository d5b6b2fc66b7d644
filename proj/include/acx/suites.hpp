#pragma once

#include <functional>
#include <string>
#include <vector>

#include "acx/cohomology.hpp"
#include "acx/manifest.hpp"
#include "acx/random.hpp"
#include "acx/report.hpp"

namespace acx {

struct SuiteContext {
  const FrameSpec& spec;
  const Manifest& manifest;
  uint64_t seed = 0;
  int max_degree = 0;
};

struct CheckDef {
  std::string name;
  std::string suite;
  std::string anchor;
  std::function<void(const SuiteContext&, CheckRecord&)> run;
};

/// Every identity the engine re-verifies at runtime, keyed by suite.
const std::vector<CheckDef>& check_registry();
const std::vector<std::string>& suite_names();  // without "all"

/// Runs one suite (or "all") deterministically under the seed; records are
/// sorted by name so output bytes never depend on execution order.
Report run_suite(const Manifest& manifest, const std::string& suite, uint64_t seed,
                 int max_degree);
Report run_suites(const Manifest& manifest, const std::vector<std::string>& suites, uint64_t seed,
                  int max_degree);

}  // namespace acx
