#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvcheck/chart.hpp"
#include "curvcheck/hypersurface.hpp"

namespace curvcheck {

/// A verification target: a chart (possibly induced from an immersed
/// hypersurface) plus its known closed-form expectations.  Absent optionals
/// mean "no expectation"; the corresponding checks report inapplicable.
struct CatalogTarget {
    std::string name;  ///< canonical "family:key=value,..." form
    ChartManifold chart;
    std::optional<Hypersurface> surface;
    FdSpec fd;  ///< default stencil for chart-level differentiation

    std::optional<double> const_sec;
    std::optional<double> einstein_factor;
    std::optional<double> scalar_curv;
    bool conformally_flat = false;  ///< Weyl part expected to vanish (needs dim >= 3)
    bool weyl_nonzero = false;      ///< negative control: Weyl part must not vanish
    std::optional<std::string> operator_class;  ///< expected spectrum classification
    std::optional<double> sff_norm_sq;
    std::optional<std::vector<double>> shape_spectrum;  ///< ascending, fixed up to global sign
    bool minimal = false;
    bool totally_geodesic = false;

    std::vector<std::string> default_checks;
    std::map<std::string, double> tol_override;  ///< per-check tolerance overrides
};

/// Builds a target from its name, e.g. "sphere:n=3,r=2".  Throws ConfigError
/// on unknown families, malformed parameters or out-of-range values.
CatalogTarget make_target(const std::string& name);

/// Canonical names of the built-in catalog, in reporting order.
std::vector<std::string> catalog_names();

}  // namespace curvcheck
