#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "curvcheck/catalog.hpp"
#include "curvcheck/errors.hpp"
#include "curvcheck/report.hpp"
#include "curvcheck/suite.hpp"
#include "curvcheck/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"numerical verification of curvature identities on a catalog of "
                 "Riemannian charts and immersed hypersurfaces"};
    app.set_version_flag("--version", std::string("curvcheck ") + curvcheck::kVersion);

    std::string config_path;
    std::string format = "text";
    std::string out_path;
    std::optional<std::uint64_t> seed_override;
    bool list_targets = false;
    bool list_checks = false;

    app.add_option("-c,--config", config_path, "suite configuration file (INI)");
    app.add_option("-f,--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("-o,--out", out_path, "write the report to this file instead of stdout");
    app.add_option("-s,--seed", seed_override, "override the configured random seed");
    app.add_flag("--list-targets", list_targets, "print catalog target names and exit");
    app.add_flag("--list-checks", list_checks, "print registered check names and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list_targets) {
            for (const std::string& n : curvcheck::catalog_names()) std::cout << n << "\n";
            return 0;
        }
        if (list_checks) {
            for (const std::string& n : curvcheck::registry_names()) std::cout << n << "\n";
            return 0;
        }
        if (config_path.empty())
            throw curvcheck::ConfigError("--config is required (or use --list-targets/--list-checks)");

        curvcheck::SuiteConfig cfg = curvcheck::parse_config_file(config_path);
        if (seed_override) cfg.seed = *seed_override;

        const curvcheck::SuiteReport report = curvcheck::run_suite(cfg);
        const std::string payload =
            format == "json" ? curvcheck::to_json(report) : curvcheck::to_text(report);

        if (out_path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream out(out_path);
            if (!out) throw curvcheck::ConfigError("cannot write to '" + out_path + "'");
            out << payload;
        }
        return report.ok() ? 0 : 1;
    } catch (const curvcheck::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
