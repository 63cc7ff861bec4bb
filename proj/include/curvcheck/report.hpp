#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvcheck/chart.hpp"

namespace curvcheck {

enum class CheckMode { Residual, Gap, NegControl, Bool };
enum class CheckStatus { Pass, Fail, Inapplicable };

const char* to_string(CheckMode m);
const char* to_string(CheckStatus s);

struct CheckRecord {
    std::string target;
    std::string check;
    int point_index = 0;
    Point point;
    CheckMode mode = CheckMode::Residual;
    double value = 0.0;
    double tol = 0.0;
    CheckStatus status = CheckStatus::Pass;
    std::string note;
};

struct TargetSummary {
    std::string name;
    int dim = 0;
    bool immersed = false;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    std::vector<TargetSummary> targets;
    std::vector<CheckRecord> records;  ///< sorted by (target, check, point_index)

    int passed() const;
    int failed() const;
    int inapplicable() const;
    bool ok() const { return failed() == 0; }
};

/// Deterministic JSON serialization: fixed key order, records pre-sorted,
/// no timestamps or environment data, so identical runs are byte-identical.
std::string to_json(const SuiteReport& report);

/// Human-readable table, one row per (target, check) with worst value, plus
/// per-point details for failures.
std::string to_text(const SuiteReport& report);

}  // namespace curvcheck
