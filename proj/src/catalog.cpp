#include "curvcheck/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "curvcheck/errors.hpp"

namespace curvcheck {

namespace {

struct Params {
    std::string family;
    std::map<std::string, double> kv;

    double get(const std::string& key, double fallback) const {
        auto it = kv.find(key);
        return it == kv.end() ? fallback : it->second;
    }
    bool has(const std::string& key) const { return kv.count(key) != 0; }
    int geti(const std::string& key, int fallback) const {
        const double v = get(key, fallback);
        const int i = static_cast<int>(std::lround(v));
        if (std::fabs(v - i) > 1e-12)
            throw ConfigError("parameter '" + key + "' must be an integer");
        return i;
    }
};

Params parse_name(const std::string& name) {
    Params p;
    const auto colon = name.find(':');
    p.family = name.substr(0, colon);
    if (colon != std::string::npos) {
        std::stringstream ss(name.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw ConfigError("malformed target parameter '" + item + "' in '" + name + "'");
            const std::string key = item.substr(0, eq);
            try {
                p.kv[key] = std::stod(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw ConfigError("non-numeric value for '" + key + "' in '" + name + "'");
            }
        }
    }
    return p;
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::vector<AxisInterval> box(int n, double lo, double hi) {
    return std::vector<AxisInterval>(static_cast<std::size_t>(n), AxisInterval{lo, hi});
}

/// Polar embedding of the unit m-sphere into R^{m+1}; angles phi[0..m).
std::vector<double> polar_embed(const double* phi, int m) {
    std::vector<double> out(static_cast<std::size_t>(m) + 1, 0.0);
    double prod = 1.0;
    for (int i = 0; i < m; ++i) {
        out[static_cast<std::size_t>(i)] = prod * std::cos(phi[i]);
        prod *= std::sin(phi[i]);
    }
    out[static_cast<std::size_t>(m)] = prod;
    return out;
}

/// Metric of the radius-r round n-sphere in polar coordinates.
SymMatrix sphere_metric(const Point& x, int n, double r) {
    SymMatrix g(n);
    double prod = r * r;
    for (int k = 0; k < n; ++k) {
        g.set(k, k, prod);
        const double s = std::sin(x[static_cast<std::size_t>(k)]);
        prod *= s * s;
    }
    return g;
}

void require_n(const Params& p, int lo, int hi) {
    if (!p.has("n")) throw ConfigError("target family '" + p.family + "' needs parameter n");
    const int n = p.geti("n", 0);
    if (n < lo || n > hi)
        throw ConfigError("target family '" + p.family + "' supports n in [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

void add_core_chart_checks(CatalogTarget& t) {
    t.default_checks = {"metric_sanity", "metric_parallel", "riemann_symmetry",
                        "contraction_consistency", "op_sec_bridge"};
}

void add_conformal_checks(CatalogTarget& t, int n) {
    if (n < 3) return;
    t.default_checks.push_back("lcf_reconstruction");
    t.default_checks.push_back("sec_from_ricci");
    t.default_checks.push_back("schouten_operator");
}

CatalogTarget make_euclidean(int n) {
    CatalogTarget t;
    t.name = "euclidean:n=" + std::to_string(n);
    t.chart = ChartManifold{n, box(n, -1.0, 1.0),
                            [n](const Point&) { return SymMatrix::identity(n); }, t.name, true};
    t.fd = FdSpec{1e-4, false};
    t.const_sec = 0.0;
    t.einstein_factor = 0.0;
    t.scalar_curv = 0.0;
    t.conformally_flat = n >= 3;
    t.operator_class = "positive-semidefinite";
    add_core_chart_checks(t);
    t.default_checks.insert(t.default_checks.end(),
                            {"scalar_value", "einstein", "const_sec", "operator_spectrum",
                             "bochner_hessian", "bochner_ricci", "bochner_spectral_vs_raw",
                             "kato"});
    add_conformal_checks(t, n);
    if (n >= 3) t.default_checks.push_back("okumura");
    if (n >= 4) {
        t.default_checks.push_back("ricci_pinching_identity");
        t.default_checks.push_back("ricci_pinching_gap");
    }
    return t;
}

CatalogTarget make_sphere(int n, double r) {
    CatalogTarget t;
    t.name = "sphere:n=" + std::to_string(n);
    if (r != 1.0) t.name += ",r=" + fmt_double(r);
    t.chart = ChartManifold{n, box(n, 0.35, 2.75),
                            [n, r](const Point& x) { return sphere_metric(x, n, r); }, t.name,
                            false};
    t.fd = FdSpec{1e-3, true};
    t.const_sec = 1.0 / (r * r);
    t.einstein_factor = (n - 1.0) / (r * r);
    t.scalar_curv = n * (n - 1.0) / (r * r);
    t.conformally_flat = n >= 3;
    t.operator_class = "positive-definite";
    add_core_chart_checks(t);
    t.default_checks.insert(t.default_checks.end(),
                            {"scalar_value", "einstein", "const_sec", "operator_spectrum",
                             "bochner_spectral_vs_raw", "kato"});
    // The Bochner residual takes a Laplacian of a twice-nested fd scalar; on
    // the n = 4 polar chart the conditioning of small sine products pushes
    // that beyond what double precision delivers at the default tolerance.
    if (n <= 3) t.default_checks.push_back("bochner_ricci");
    add_conformal_checks(t, n);
    if (n == 2) t.default_checks.push_back("convergence_order");
    if (n >= 4) {
        t.default_checks.push_back("ricci_pinching_identity");
        t.default_checks.push_back("ricci_pinching_gap");
    }
    return t;
}

CatalogTarget make_hyperbolic(int n) {
    CatalogTarget t;
    t.name = "hyperbolic:n=" + std::to_string(n);
    std::vector<AxisInterval> dom = box(n, -1.0, 1.0);
    dom[static_cast<std::size_t>(n) - 1] = AxisInterval{0.6, 2.2};
    t.chart = ChartManifold{n, dom,
                            [n](const Point& x) {
                                const double y = x[static_cast<std::size_t>(n) - 1];
                                SymMatrix g(n);
                                for (int i = 0; i < n; ++i) g.set(i, i, 1.0 / (y * y));
                                return g;
                            },
                            t.name, false};
    t.fd = FdSpec{1e-3, true};
    t.const_sec = -1.0;
    t.einstein_factor = -(n - 1.0);
    t.scalar_curv = -n * (n - 1.0);
    t.conformally_flat = n >= 3;
    t.operator_class = "negative-definite";
    add_core_chart_checks(t);
    t.default_checks.insert(t.default_checks.end(),
                            {"scalar_value", "einstein", "const_sec", "operator_spectrum",
                             "bochner_ricci", "bochner_spectral_vs_raw", "kato"});
    add_conformal_checks(t, n);
    if (n == 2) t.default_checks.push_back("convergence_order");
    return t;
}

CatalogTarget make_torus() {
    CatalogTarget t;
    const int n = 2;
    t.name = "torus:n=2";
    t.chart = ChartManifold{n, box(n, 0.0, 2.0 * 3.14159265358979323846),
                            [n](const Point&) { return SymMatrix::identity(n); }, t.name, true};
    t.fd = FdSpec{1e-4, false};
    t.const_sec = 0.0;
    t.einstein_factor = 0.0;
    t.scalar_curv = 0.0;
    t.operator_class = "positive-semidefinite";
    add_core_chart_checks(t);
    t.default_checks.insert(t.default_checks.end(),
                            {"scalar_value", "einstein", "const_sec", "operator_spectrum",
                             "bochner_hessian", "bochner_spectral_vs_raw", "kato"});
    return t;
}

CatalogTarget make_bumpy() {
    CatalogTarget t;
    const int n = 3;
    t.name = "bumpy:n=3";
    t.chart = ChartManifold{n, box(n, -1.0, 1.0),
                            [](const Point& x) {
                                SymMatrix g(3);
                                g.set(0, 0, 1.0 + 0.15 * std::sin(x[0]) * std::cos(x[1]));
                                g.set(1, 1, 1.0 + 0.15 * std::sin(x[1]) * std::cos(x[2]));
                                g.set(2, 2, 1.0 + 0.15 * std::cos(x[0]) * std::sin(x[2]));
                                g.set(0, 1, 0.05 * std::sin(x[0] + x[1]));
                                g.set(0, 2, 0.05 * std::sin(x[0] + x[2] + 0.5));
                                g.set(1, 2, 0.05 * std::cos(x[1] - x[2] + 0.3));
                                return g;
                            },
                            t.name, false};
    t.fd = FdSpec{1e-3, true};
    t.conformally_flat = true;  // dimension 3: the Weyl part vanishes identically
    add_core_chart_checks(t);
    add_conformal_checks(t, n);
    t.default_checks.push_back("okumura");
    return t;
}

CatalogTarget make_nonlcf() {
    CatalogTarget t;
    const int n = 4;
    t.name = "nonlcf:n=4";
    std::vector<AxisInterval> dom = box(n, -1.0, 1.0);
    dom[0] = AxisInterval{0.35, 2.75};
    t.chart = ChartManifold{n, dom,
                            [](const Point& x) {
                                SymMatrix g(4);
                                g.set(0, 0, 1.0);
                                const double s = std::sin(x[0]);
                                g.set(1, 1, s * s);
                                g.set(2, 2, 1.0);
                                g.set(3, 3, 1.0);
                                return g;
                            },
                            t.name, false};
    t.fd = FdSpec{1e-3, true};
    t.scalar_curv = 2.0;
    t.weyl_nonzero = true;
    add_core_chart_checks(t);
    t.default_checks.insert(t.default_checks.end(), {"scalar_value", "weyl_nonzero", "okumura"});
    return t;
}

void add_hypersurface_overrides(CatalogTarget& t) {
    t.tol_override["riemann_symmetry"] = 1e-5;
    t.tol_override["contraction_consistency"] = 1e-4;
    t.tol_override["scalar_value"] = 1e-4;
    t.tol_override["einstein"] = 1e-4;
    t.tol_override["const_sec"] = 1e-4;
}

CatalogTarget make_equator(int n) {
    CatalogTarget t;
    t.name = "equator:n=" + std::to_string(n);
    Hypersurface h;
    h.dim = n;
    h.domain = box(n, 0.35, 2.75);
    h.name = t.name;
    h.step = 1e-3;
    h.immersion = [n](const Point& u) {
        std::vector<double> f = polar_embed(u.data(), n);
        f.push_back(0.0);
        return f;
    };
    t.surface = h;
    t.chart = induced_chart(h);
    t.fd = FdSpec{1e-3, true};
    t.const_sec = 1.0;
    t.einstein_factor = n - 1.0;
    t.scalar_curv = n * (n - 1.0);
    t.conformally_flat = n >= 3;
    t.operator_class = "positive-definite";
    t.minimal = true;
    t.totally_geodesic = true;
    t.sff_norm_sq = 0.0;
    t.shape_spectrum = std::vector<double>(static_cast<std::size_t>(n), 0.0);
    add_core_chart_checks(t);
    t.default_checks.insert(t.default_checks.end(),
                            {"scalar_value", "einstein", "const_sec", "operator_spectrum",
                             "sff_minimal", "totally_geodesic", "sff_norm", "sff_codazzi",
                             "sff_divergence", "simons", "shape_spectrum"});
    add_conformal_checks(t, n);
    add_hypersurface_overrides(t);
    return t;
}

CatalogTarget make_clifford(int n, int k) {
    CatalogTarget t;
    t.name = "clifford:n=" + std::to_string(n) + ",k=" + std::to_string(k);
    const double r1 = std::sqrt(static_cast<double>(k) / n);
    const double r2 = std::sqrt(static_cast<double>(n - k) / n);
    Hypersurface h;
    h.dim = n;
    h.name = t.name;
    h.step = 1e-3;
    h.domain.clear();
    for (int i = 0; i < n; ++i) {
        const bool circle = (i < k) ? (k == 1) : (n - k == 1);
        h.domain.push_back(circle ? AxisInterval{0.3, 6.0} : AxisInterval{0.35, 2.75});
    }
    h.immersion = [n, k, r1, r2](const Point& u) {
        std::vector<double> f;
        f.reserve(static_cast<std::size_t>(n) + 2);
        for (double v : polar_embed(u.data(), k)) f.push_back(r1 * v);
        for (double v : polar_embed(u.data() + k, n - k)) f.push_back(r2 * v);
        return f;
    };
    t.surface = h;
    t.chart = induced_chart(h);
    t.fd = FdSpec{1e-3, true};
    t.minimal = true;
    t.sff_norm_sq = static_cast<double>(n);

    // Principal curvatures sqrt((n-k)/k) (k-fold) and -sqrt(k/(n-k)), taken
    // up to a global sign by the spectrum check.
    std::vector<double> spec;
    for (int i = 0; i < k; ++i) spec.push_back(std::sqrt(static_cast<double>(n - k) / k));
    for (int i = 0; i < n - k; ++i) spec.push_back(-std::sqrt(static_cast<double>(k) / (n - k)));
    std::sort(spec.begin(), spec.end());
    t.shape_spectrum = spec;

    const double s1 = (k >= 2) ? k * (k - 1.0) / (r1 * r1) : 0.0;
    const double s2 = (n - k >= 2) ? (n - k) * (n - k - 1.0) / (r2 * r2) : 0.0;
    t.scalar_curv = s1 + s2;
    if (n == 2) {
        t.const_sec = 0.0;
        t.einstein_factor = 0.0;
        t.scalar_curv = 0.0;
    }
    if (n == 4 && k == 2) {
        t.einstein_factor = 2.0;
        t.weyl_nonzero = true;
    }
    if (n == 3) t.conformally_flat = true;

    add_core_chart_checks(t);
    t.default_checks.insert(t.default_checks.end(),
                            {"scalar_value", "sff_minimal", "sff_norm", "sff_codazzi",
                             "sff_divergence", "simons", "shape_spectrum"});
    if (t.const_sec) t.default_checks.push_back("const_sec");
    if (t.einstein_factor) t.default_checks.push_back("einstein");
    if (t.weyl_nonzero) t.default_checks.push_back("weyl_nonzero");
    add_conformal_checks(t, n == 3 ? 3 : 0);
    add_hypersurface_overrides(t);
    return t;
}

}  // namespace

CatalogTarget make_target(const std::string& name) {
    const Params p = parse_name(name);
    for (const auto& [key, value] : p.kv) {
        (void)value;
        if (key != "n" && key != "r" && key != "k")
            throw ConfigError("unknown parameter '" + key + "' for target '" + name + "'");
    }
    if (p.family == "euclidean") {
        require_n(p, 2, 6);
        return make_euclidean(p.geti("n", 0));
    }
    if (p.family == "sphere") {
        require_n(p, 2, 6);
        const double r = p.get("r", 1.0);
        if (!(r > 0.0)) throw ConfigError("sphere radius must be positive");
        return make_sphere(p.geti("n", 0), r);
    }
    if (p.family == "hyperbolic") {
        require_n(p, 2, 6);
        return make_hyperbolic(p.geti("n", 0));
    }
    if (p.family == "torus") {
        if (p.geti("n", 2) != 2) throw ConfigError("torus target supports n=2 only");
        return make_torus();
    }
    if (p.family == "bumpy") {
        if (p.geti("n", 3) != 3) throw ConfigError("bumpy target supports n=3 only");
        return make_bumpy();
    }
    if (p.family == "nonlcf") {
        if (p.geti("n", 4) != 4) throw ConfigError("nonlcf target supports n=4 only");
        return make_nonlcf();
    }
    if (p.family == "equator") {
        require_n(p, 2, 4);
        return make_equator(p.geti("n", 0));
    }
    if (p.family == "clifford") {
        require_n(p, 2, 6);
        const int n = p.geti("n", 0);
        const int k = p.geti("k", 0);
        if (k < 1 || k > n - 1)
            throw ConfigError("clifford target needs 1 <= k <= n-1");
        return make_clifford(n, k);
    }
    throw ConfigError("unknown target family '" + p.family + "'");
}

std::vector<std::string> catalog_names() {
    return {
        "euclidean:n=2", "euclidean:n=3", "euclidean:n=4",
        "sphere:n=2",    "sphere:n=3",    "sphere:n=4",
        "sphere:n=2,r=2", "sphere:n=3,r=2",
        "hyperbolic:n=2", "hyperbolic:n=3",
        "torus:n=2",
        "bumpy:n=3",
        "nonlcf:n=4",
        "equator:n=2",   "equator:n=3",
        "clifford:n=2,k=1", "clifford:n=3,k=1", "clifford:n=4,k=2",
    };
}

}  // namespace curvcheck
