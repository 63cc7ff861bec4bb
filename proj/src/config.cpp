#include "curvcheck/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "curvcheck/errors.hpp"

namespace curvcheck {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw ConfigError(origin + ":" + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_u64(const std::string& v, const std::string& origin, int line) {
    try {
        // stoull accepts a sign and wraps; insist on a plain digit string.
        if (v.empty() || v[0] == '-' || v[0] == '+') throw std::invalid_argument(v);
        std::size_t pos = 0;
        const unsigned long long r = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        fail(origin, line, "expected an unsigned integer, got '" + v + "'");
    }
}

int parse_points(const std::string& v, const std::string& origin, int line) {
    try {
        std::size_t pos = 0;
        const int r = std::stoi(v, &pos);
        if (pos != v.size() || r < 1) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        fail(origin, line, "expected a positive integer, got '" + v + "'");
    }
}

double parse_double(const std::string& v, const std::string& origin, int line) {
    try {
        std::size_t pos = 0;
        const double r = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        fail(origin, line, "expected a number, got '" + v + "'");
    }
}

Point parse_point(const std::string& v, const std::string& origin, int line) {
    Point p;
    for (const std::string& c : split_list(v)) p.push_back(parse_double(c, origin, line));
    if (p.empty()) fail(origin, line, "fixed_point needs at least one coordinate");
    return p;
}

}  // namespace

SuiteConfig parse_config_text(const std::string& text, const std::string& origin) {
    SuiteConfig cfg;
    enum class Section { None, Suite, Target, Check } section = Section::None;
    std::string section_name;

    std::stringstream ss(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(ss, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(origin, lineno, "unterminated section header");
            const std::string inner = trim(line.substr(1, line.size() - 2));
            if (inner == "suite") {
                section = Section::Suite;
            } else if (inner.rfind("target:", 0) == 0) {
                section = Section::Target;
                section_name = trim(inner.substr(7));
                if (section_name.empty()) fail(origin, lineno, "empty target name");
            } else if (inner.rfind("check:", 0) == 0) {
                section = Section::Check;
                section_name = trim(inner.substr(6));
                if (section_name.empty()) fail(origin, lineno, "empty check name");
            } else {
                fail(origin, lineno, "unknown section '[" + inner + "]'");
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(origin, lineno, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(origin, lineno, "empty key");

        switch (section) {
            case Section::None:
                fail(origin, lineno, "'" + key + "' outside of any section");
            case Section::Suite:
                if (key == "seed") {
                    cfg.seed = parse_u64(value, origin, lineno);
                } else if (key == "points") {
                    cfg.points = parse_points(value, origin, lineno);
                } else if (key == "targets") {
                    if (value != "all") cfg.targets = split_list(value);
                } else if (key == "checks") {
                    cfg.checks = split_list(value);
                } else if (key == "strategy") {
                    if (value == "uniform")
                        cfg.strategy = SuiteConfig::Strategy::Uniform;
                    else if (value == "fixed")
                        cfg.strategy = SuiteConfig::Strategy::Fixed;
                    else
                        fail(origin, lineno, "strategy must be 'uniform' or 'fixed'");
                } else {
                    fail(origin, lineno, "unknown suite key '" + key + "'");
                }
                break;
            case Section::Target: {
                TargetOverride& ov = cfg.target_overrides[section_name];
                if (key == "points")
                    ov.points = parse_points(value, origin, lineno);
                else if (key == "checks")
                    ov.checks = split_list(value);
                else if (key == "fixed_point")
                    ov.fixed_points.push_back(parse_point(value, origin, lineno));
                else
                    fail(origin, lineno, "unknown target key '" + key + "'");
                break;
            }
            case Section::Check: {
                CheckOverride& ov = cfg.check_overrides[section_name];
                if (key == "tol")
                    ov.tol = parse_double(value, origin, lineno);
                else if (key == "points")
                    ov.points = parse_points(value, origin, lineno);
                else
                    fail(origin, lineno, "unknown check key '" + key + "'");
                break;
            }
        }
    }
    return cfg;
}

SuiteConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

}  // namespace curvcheck
