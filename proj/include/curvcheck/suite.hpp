#pragma once

#include <functional>

#include "curvcheck/catalog.hpp"
#include "curvcheck/config.hpp"
#include "curvcheck/report.hpp"
#include "curvcheck/rng.hpp"

namespace curvcheck {

struct CheckContext {
    const CatalogTarget& target;
    const Point& x;
    SplitMix64& rng;
};

struct CheckResult {
    double value = 0.0;
    bool ok = true;          ///< consulted by bool-mode checks only
    std::string note;
};

struct CheckDef {
    std::string name;
    CheckMode mode = CheckMode::Residual;
    double tol = 0.0;
    std::function<CheckResult(const CheckContext&)> fn;
};

/// All registered checks, in registration order.
const std::vector<CheckDef>& check_registry();

/// Names of all registered checks.
std::vector<std::string> registry_names();

/// Runs the configured suite over the catalog.  Throws ConfigError for
/// unknown targets/checks or a fixed-point strategy without points.
SuiteReport run_suite(const SuiteConfig& cfg);

}  // namespace curvcheck
