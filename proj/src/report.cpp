#include "curvcheck/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

#include "curvcheck/version.hpp"

namespace curvcheck {

namespace {

constexpr const char* kConvention =
    "riemann_low[i][j][k][l] with sec(X,Y) = R_ijkl X^i Y^j X^k Y^l, round unit sphere +1; "
    "(grad T)_{i k1..kp} carries the derivative slot first; (delta T) = -g^{im}(grad T)_{im..}; "
    "curvature action on traceless symmetric 2-tensors normalized so that "
    "g(Op(theta), theta) = 2 sec(X,Y) for theta = (X@Y + Y@X)/2, X, Y orthonormal";

const std::vector<std::string>& report_notes() {
    static const std::vector<std::string> notes = {
        "sec_from_ricci checks sec(e_i, e_j) = (r_i + r_j - s/(n-1))/(n-2) over a "
        "g-orthonormal Ricci eigenbasis; this equals the sum lambda_i + lambda_j of the "
        "corresponding Schouten eigenvalues.",
        "the variant of the sectional reconstruction that omits the 1/(n-2) factor is "
        "dimensionally inconsistent for n != 3 and is not used; only the corrected form "
        "above is checked.",
        "gap-mode checks pass when value >= -tol; negative-control checks pass when "
        "value > tol.",
    };
    return notes;
}

int count(const SuiteReport& r, CheckStatus s) {
    int n = 0;
    for (const CheckRecord& rec : r.records)
        if (rec.status == s) ++n;
    return n;
}

}  // namespace

const char* to_string(CheckMode m) {
    switch (m) {
        case CheckMode::Residual: return "residual";
        case CheckMode::Gap: return "gap";
        case CheckMode::NegControl: return "negative-control";
        case CheckMode::Bool: return "bool";
    }
    return "unknown";
}

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Inapplicable: return "inapplicable";
    }
    return "unknown";
}

int SuiteReport::passed() const { return count(*this, CheckStatus::Pass); }
int SuiteReport::failed() const { return count(*this, CheckStatus::Fail); }
int SuiteReport::inapplicable() const { return count(*this, CheckStatus::Inapplicable); }

std::string to_json(const SuiteReport& report) {
    using json = nlohmann::ordered_json;
    json root;
    root["meta"] = {{"tool", "curvcheck"},
                    {"version", kVersion},
                    {"seed", report.seed},
                    {"convention", kConvention},
                    {"notes", report_notes()}};

    json targets = json::array();
    for (const TargetSummary& t : report.targets)
        targets.push_back({{"name", t.name}, {"dim", t.dim}, {"immersed", t.immersed}});
    root["targets"] = std::move(targets);

    json checks = json::array();
    for (const CheckRecord& r : report.records) {
        json rec = {{"target", r.target},   {"check", r.check},
                    {"point_index", r.point_index}, {"point", r.point},
                    {"mode", to_string(r.mode)},    {"value", r.value},
                    {"tol", r.tol},                 {"status", to_string(r.status)}};
        if (!r.note.empty()) rec["note"] = r.note;
        checks.push_back(std::move(rec));
    }
    root["checks"] = std::move(checks);

    root["summary"] = {{"pass", report.passed()},
                       {"fail", report.failed()},
                       {"inapplicable", report.inapplicable()},
                       {"targets", report.targets.size()},
                       {"status", report.ok() ? "pass" : "fail"}};
    return root.dump(2) + "\n";
}

std::string to_text(const SuiteReport& report) {
    struct Row {
        int points = 0;
        double worst = 0.0;
        bool worst_set = false;
        double tol = 0.0;
        CheckMode mode = CheckMode::Residual;
        int fails = 0;
        int inapplicable = 0;
        std::string note;
    };
    std::map<std::pair<std::string, std::string>, Row> rows;
    for (const CheckRecord& r : report.records) {
        Row& row = rows[{r.target, r.check}];
        ++row.points;
        row.tol = r.tol;
        row.mode = r.mode;
        if (r.status == CheckStatus::Fail) ++row.fails;
        if (r.status == CheckStatus::Inapplicable) {
            ++row.inapplicable;
            if (row.note.empty()) row.note = r.note;
            continue;
        }
        // "worst" = largest residual, smallest gap, smallest control value.
        const bool larger_is_worse = (r.mode == CheckMode::Residual || r.mode == CheckMode::Bool);
        if (!row.worst_set || (larger_is_worse ? r.value > row.worst : r.value < row.worst)) {
            row.worst = r.value;
            row.worst_set = true;
        }
    }

    std::ostringstream os;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-28s %-26s %4s %12s %10s  %s\n", "target", "check", "pts",
                  "worst", "tol", "status");
    os << buf;
    os << std::string(92, '-') << "\n";
    for (const auto& [key, row] : rows) {
        std::string status = "pass";
        if (row.fails > 0)
            status = "FAIL";
        else if (row.inapplicable == row.points)
            status = "n/a (" + (row.note.empty() ? std::string("gated") : row.note) + ")";
        std::string worst = "-";
        if (row.worst_set) {
            std::snprintf(buf, sizeof buf, "%.3e", row.worst);
            worst = buf;
        }
        std::snprintf(buf, sizeof buf, "%-28s %-26s %4d %12s %10.1e  %s\n", key.first.c_str(),
                      key.second.c_str(), row.points, worst.c_str(), row.tol, status.c_str());
        os << buf;
    }

    bool any_fail = false;
    for (const CheckRecord& r : report.records) {
        if (r.status != CheckStatus::Fail) continue;
        if (!any_fail) {
            os << "\nfailures:\n";
            any_fail = true;
        }
        os << "  " << r.target << "/" << r.check << " point_index=" << r.point_index << " point=[";
        for (std::size_t i = 0; i < r.point.size(); ++i) {
            if (i) os << ", ";
            std::snprintf(buf, sizeof buf, "%.6g", r.point[i]);
            os << buf;
        }
        std::snprintf(buf, sizeof buf, "] value=%.6e tol=%.1e", r.value, r.tol);
        os << buf;
        if (!r.note.empty()) os << " note=" << r.note;
        os << "\n";
    }

    os << "\nsummary: " << report.passed() << " pass, " << report.failed() << " fail, "
       << report.inapplicable() << " inapplicable over " << report.targets.size() << " targets -> "
       << (report.ok() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace curvcheck
