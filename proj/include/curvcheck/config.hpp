#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvcheck/chart.hpp"

namespace curvcheck {

struct TargetOverride {
    std::optional<int> points;
    std::optional<std::vector<std::string>> checks;
    std::vector<Point> fixed_points;
};

struct CheckOverride {
    std::optional<double> tol;
    std::optional<int> points;
};

/// Suite configuration, INI-style:
///
///   [suite]
///   seed = 20260823
///   points = 3
///   targets = all            # or a comma list of catalog names
///   checks = ...             # optional global override of per-target defaults
///   strategy = uniform       # or fixed (uses fixed_point lines per target)
///
///   [target:sphere:n=3]
///   points = 5
///   checks = metric_sanity, const_sec
///   fixed_point = 1.0, 1.2, 0.9
///
///   [check:const_sec]
///   tol = 1e-6
///   points = 4
struct SuiteConfig {
    std::uint64_t seed = 1;
    int points = 3;
    std::vector<std::string> targets;  ///< empty means the full catalog
    std::optional<std::vector<std::string>> checks;
    enum class Strategy { Uniform, Fixed } strategy = Strategy::Uniform;
    std::map<std::string, TargetOverride> target_overrides;
    std::map<std::string, CheckOverride> check_overrides;
};

/// Parses configuration text; `origin` labels diagnostics ("file:line: ...").
/// Throws ConfigError on malformed input.
SuiteConfig parse_config_text(const std::string& text, const std::string& origin);

/// Reads and parses a configuration file.
SuiteConfig parse_config_file(const std::string& path);

}  // namespace curvcheck
