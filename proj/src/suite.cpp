#include "curvcheck/suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "curvcheck/codazzi.hpp"
#include "curvcheck/conformal.hpp"
#include "curvcheck/curvature_operator.hpp"
#include "curvcheck/errors.hpp"
#include "curvcheck/hypersurface.hpp"
#include "curvcheck/weitzenbock.hpp"

namespace curvcheck {

namespace {

PointGeometry geom_at(const CheckContext& c) {
    return point_geometry(c.target.chart, c.x, c.target.fd);
}

/// Harmonic polynomial whose Hessian is traceless; degree <= 3 keeps the
/// stencils of the Hessian field exact.  Coordinates are centered and scaled
/// to the chart box so function values stay O(1) on wide domains, keeping the
/// round-off floor of the nested stencils flat across charts.
ScalarField harmonic_cubic(const ChartManifold& chart) {
    const int n = chart.dim;
    std::vector<double> c(static_cast<std::size_t>(n));
    double w = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        c[static_cast<std::size_t>(i)] = 0.5 * (chart.domain[static_cast<std::size_t>(i)].lo +
                                                chart.domain[static_cast<std::size_t>(i)].hi);
        w = std::min(w, 0.5 * (chart.domain[static_cast<std::size_t>(i)].hi -
                               chart.domain[static_cast<std::size_t>(i)].lo));
    }
    if (n == 2)
        return [c, w](const Point& x) {
            const double u = (x[0] - c[0]) / w, v = (x[1] - c[1]) / w;
            return u * u * u - 3.0 * u * v * v;
        };
    return [c, w](const Point& x) {
        return (x[0] - c[0]) / w * ((x[1] - c[1]) / w) * ((x[2] - c[2]) / w);
    };
}

SymMatrix random_symmetric(int n, SplitMix64& rng) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, rng.uniform(-1.0, 1.0));
    return m;
}

/// Removes the g-trace part and normalizes to unit g-norm.
SymMatrix g_traceless_unit(const SymMatrix& m, const SymMatrix& g, const SymMatrix& g_inv) {
    const int n = m.dim();
    double tr = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tr += g_inv(i, j) * m(i, j);
    SymMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) out.set(i, j, m(i, j) - tr / n * g(i, j));
    double norm_sq = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    norm_sq += g_inv(i, k) * g_inv(j, l) * out(i, j) * out(k, l);
    if (norm_sq < 1e-20) throw VanishingNormError("random traceless draw degenerated");
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) out.set(i, j, out(i, j) * inv);
    return out;
}

const Hypersurface& surface_of(const CheckContext& c) {
    if (!c.target.surface)
        throw UnsupportedConstructionError("check needs an immersed hypersurface target");
    return *c.target.surface;
}

template <class T>
const T& expect(const std::optional<T>& v, const char* what) {
    if (!v) throw UnsupportedConstructionError(std::string("target has no ") + what);
    return *v;
}

// ---- chart-level checks -----------------------------------------------------

CheckResult chk_metric_sanity(const CheckContext& c) {
    const SymMatrix g = metric_at(c.target.chart, c.x);
    const int n = g.dim();
    try {
        const SymMatrix inv = Cholesky::factor(g).inverse();
        double worst = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int k = 0; k < n; ++k) s += g(i, k) * inv(k, j);
                worst = std::max(worst, std::fabs(s - (i == j ? 1.0 : 0.0)));
            }
        return {worst, true, ""};
    } catch (const SingularMetricError&) {
        return {std::numeric_limits<double>::infinity(), false, "metric not positive definite"};
    }
}

CheckResult chk_metric_parallel(const CheckContext& c) {
    const SymTensorField field = metric_multiple_field(c.target.chart, 1.0);
    return {covariant_derivative(field, c.target.chart, c.x, c.target.fd).max_abs(), true, ""};
}

CheckResult chk_riemann_symmetry(const CheckContext& c) {
    const PointGeometry geom = geom_at(c);
    const int n = geom.dim;
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const double r = geom.riemann_low.at({i, j, k, l});
                    worst = std::max(worst, std::fabs(r + geom.riemann_low.at({j, i, k, l})));
                    worst = std::max(worst, std::fabs(r + geom.riemann_low.at({i, j, l, k})));
                    worst = std::max(worst, std::fabs(r - geom.riemann_low.at({k, l, i, j})));
                    worst = std::max(worst, std::fabs(r + geom.riemann_low.at({j, l, k, i}) +
                                                      geom.riemann_low.at({l, i, k, j})));
                }
    return {worst, true, ""};
}

CheckResult chk_contraction_consistency(const CheckContext& c) {
    const PointGeometry geom = geom_at(c);
    const int n = geom.dim;
    double worst = geom.ricci_asymmetry;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double first = 0.0, second = 0.0;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                    first += geom.g_inv(i, k) * geom.riemann_low.at({i, a, k, b});
                    second += geom.g_inv(i, k) * geom.riemann_low.at({a, i, b, k});
                }
            worst = std::max(worst, std::fabs(first - geom.ricci(a, b)));
            worst = std::max(worst, std::fabs(second - geom.ricci(a, b)));
        }
    return {worst, true, ""};
}

CheckResult chk_scalar_value(const CheckContext& c) {
    const double expected = expect(c.target.scalar_curv, "scalar curvature expectation");
    return {std::fabs(geom_at(c).scalar - expected), true, ""};
}

CheckResult chk_einstein(const CheckContext& c) {
    const double lambda = expect(c.target.einstein_factor, "Einstein expectation");
    const PointGeometry geom = geom_at(c);
    double worst = 0.0;
    for (int i = 0; i < geom.dim; ++i)
        for (int j = 0; j < geom.dim; ++j)
            worst = std::max(worst, std::fabs(geom.ricci(i, j) - lambda * geom.g(i, j)));
    return {worst, true, ""};
}

CheckResult chk_const_sec(const CheckContext& c) {
    const double expected = expect(c.target.const_sec, "constant-curvature expectation");
    const PointGeometry geom = geom_at(c);
    const int n = geom.dim;
    double worst = 0.0;
    int done = 0, attempts = 0;
    while (done < 10 && attempts < 200) {
        ++attempts;
        std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            x[static_cast<std::size_t>(i)] = c.rng.uniform(-1.0, 1.0);
            y[static_cast<std::size_t>(i)] = c.rng.uniform(-1.0, 1.0);
        }
        try {
            worst = std::max(worst, std::fabs(sectional_curvature(geom, x, y) - expected));
            ++done;
        } catch (const DegeneratePlaneError&) {
        }
    }
    if (done == 0) throw DegeneratePlaneError("no usable random planes");
    return {worst, true, ""};
}

CheckResult chk_operator_spectrum(const CheckContext& c) {
    const std::string& expected = expect(c.target.operator_class, "operator classification");
    const PointGeometry geom = geom_at(c);
    const OperatorSpectrum spec = curvature_operator_spectrum(geom, traceless_basis(geom));
    const std::string actual = to_string(spec.classification);
    CheckResult r;
    r.value = spec.self_adjoint_residual;
    r.ok = (actual == expected) && spec.self_adjoint_residual <= 1e-8;
    r.note = "classified " + actual + ", expected " + expected +
             "; self-adjointness residual shown as value (must stay <= 1e-8)";
    return r;
}

CheckResult chk_op_sec_bridge(const CheckContext& c) {
    const PointGeometry geom = geom_at(c);
    const BridgingResiduals b = bridging_residuals(geom, c.rng, 20);
    return {std::max(b.op_sec, b.ricci_sum), true, ""};
}

CheckResult chk_lcf_reconstruction(const CheckContext& c) {
    if (!c.target.conformally_flat)
        throw UnsupportedConstructionError("target not expected conformally flat");
    return {lcf_residual(geom_at(c)), true, ""};
}

CheckResult chk_weyl_nonzero(const CheckContext& c) {
    if (!c.target.weyl_nonzero)
        throw UnsupportedConstructionError("target is not a negative control");
    return {lcf_residual(geom_at(c)), true, ""};
}

CheckResult chk_sec_from_ricci(const CheckContext& c) {
    if (!c.target.conformally_flat)
        throw UnsupportedConstructionError("target not expected conformally flat");
    return {sec_from_ricci_residual(geom_at(c)), true, ""};
}

CheckResult chk_schouten_operator(const CheckContext& c) {
    if (!c.target.conformally_flat)
        throw UnsupportedConstructionError("target not expected conformally flat");
    const PointGeometry geom = geom_at(c);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const SymMatrix theta =
            g_traceless_unit(random_symmetric(geom.dim, c.rng), geom.g, geom.g_inv);
        worst = std::max(worst, schouten_operator_identity_residual(geom, theta));
    }
    return {worst, true, ""};
}

CheckResult chk_bochner_hessian(const CheckContext& c) {
    const SymTensorField field =
        hessian_field(c.target.chart, harmonic_cubic(c.target.chart), "hessian-cubic");
    const BochnerBreakdown b = bochner_breakdown(field, c.target.chart, c.x, c.target.fd);
    return {std::fabs(b.residual), true, ""};
}

/// Ricci evaluator with one extra extrapolation level on top of the refined
/// stencil.  The norm scalar of this field is differentiated twice more by the
/// outer Laplacian, so its own truncation bias must sit far below the residual
/// tolerance even near poorly conditioned chart corners.
SymTensorField ricci_field_deep(const ChartManifold& chart, double h) {
    SymTensorField f;
    f.rank = 2;
    f.name = "ricci-deep";
    f.eval = [chart, h](const Point& x) {
        const SymMatrix a = point_geometry(chart, x, FdSpec{h, true}).ricci;
        const SymMatrix b = point_geometry(chart, x, FdSpec{0.5 * h, true}).ricci;
        SymMatrix out(a.dim());
        for (int i = 0; i < a.dim(); ++i)
            for (int j = i; j < a.dim(); ++j) out.set(i, j, (16.0 * b(i, j) - a(i, j)) / 15.0);
        return out.to_tensor();
    };
    return f;
}

CheckResult chk_bochner_ricci(const CheckContext& c) {
    const SymTensorField field = ricci_field_deep(c.target.chart, 1.2e-2);
    BochnerOptions opt;
    opt.lap_step = 2e-2;  // widest outer stencil the sampling margin admits
    const BochnerBreakdown b =
        bochner_breakdown(field, c.target.chart, c.x, FdSpec{1e-3, true}, opt);
    return {std::fabs(b.residual), true, ""};
}

CheckResult chk_bochner_spectral_vs_raw(const CheckContext& c) {
    // The two evaluation paths must agree to 1e-8, which is below the symmetry
    // noise of the plain stencil; use a Richardson-refined geometry here.
    const PointGeometry geom = point_geometry(c.target.chart, c.x, FdSpec{1e-3, true});
    const SymMatrix t = g_traceless_unit(random_symmetric(geom.dim, c.rng), geom.g, geom.g_inv);
    const double raw = bochner_q_raw(geom, t.to_tensor());
    const double spectral = bochner_q_spectral(geom, t);
    return {std::fabs(raw - spectral), true, ""};
}

CheckResult chk_kato(const CheckContext& c) {
    const SymTensorField field =
        c.target.chart.flat
            ? hessian_field(c.target.chart, harmonic_cubic(c.target.chart), "hessian-cubic")
            : ricci_field(c.target.chart);
    const KatoGap k = kato_gap(field, c.target.chart, c.x);
    return {k.gap, true, ""};
}

CheckResult chk_okumura(const CheckContext& c) {
    const int n = c.target.chart.dim;
    double worst = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 20; ++trial) {
        SymMatrix m = random_symmetric(n, c.rng);
        const double tr = m.trace();
        for (int i = 0; i < n; ++i) m.set(i, i, m(i, i) - tr / n);
        worst = std::min(worst, okumura_gap(m));
    }
    return {worst, true, ""};
}

CheckResult chk_ricci_pinching_identity(const CheckContext& c) {
    return {ricci_pinching(geom_at(c)).identity_residual, true, ""};
}

CheckResult chk_ricci_pinching_gap(const CheckContext& c) {
    return {ricci_pinching(geom_at(c)).gap, true, ""};
}

CheckResult chk_convergence_order(const CheckContext& c) {
    const double expected = expect(c.target.scalar_curv, "scalar curvature expectation");
    const double e1 =
        std::fabs(point_geometry(c.target.chart, c.x, FdSpec{1e-2, false}).scalar - expected);
    const double e2 =
        std::fabs(point_geometry(c.target.chart, c.x, FdSpec{5e-3, false}).scalar - expected);
    CheckResult r;
    if (e2 < 1e-12) {
        r.value = 0.0;
        r.ok = false;
        r.note = "error too small to resolve the convergence order";
        return r;
    }
    r.value = e1 / e2;
    r.ok = (r.value >= 3.5 && r.value <= 4.5);
    r.note = "halving the step should divide the error by ~4";
    return r;
}

// ---- hypersurface checks ----------------------------------------------------

CheckResult chk_sff_minimal(const CheckContext& c) {
    if (!c.target.minimal) throw UnsupportedConstructionError("target not expected minimal");
    const SffData s = second_fundamental_form(surface_of(c), c.x, true);
    return {std::fabs(s.mean), true, ""};
}

CheckResult chk_totally_geodesic(const CheckContext& c) {
    if (!c.target.totally_geodesic)
        throw UnsupportedConstructionError("target not expected totally geodesic");
    const SffData s = second_fundamental_form(surface_of(c), c.x, true);
    return {s.sff.max_abs(), true, ""};
}

CheckResult chk_sff_norm(const CheckContext& c) {
    const double expected = expect(c.target.sff_norm_sq, "second-fundamental-form norm");
    const SffData s = second_fundamental_form(surface_of(c), c.x, true);
    return {std::fabs(s.norm_sq - expected), true, ""};
}

CheckResult chk_sff_codazzi(const CheckContext& c) {
    const Hypersurface& h = surface_of(c);
    return {codazzi_residual(sff_field(h), c.target.chart, c.x, FdSpec{h.step, false}), true, ""};
}

CheckResult chk_sff_divergence(const CheckContext& c) {
    if (!c.target.minimal) throw UnsupportedConstructionError("target not expected minimal");
    const Hypersurface& h = surface_of(c);
    const FdSpec fd{h.step, false};
    const DenseTensor div = divergence(sff_field(h), c.target.chart, c.x, fd);
    const SymMatrix g = metric_at(c.target.chart, c.x);
    return {std::sqrt(std::max(0.0, tensor_norm_sq(div, g))), true, ""};
}

CheckResult chk_simons(const CheckContext& c) {
    if (!c.target.minimal) throw UnsupportedConstructionError("target not expected minimal");
    const SimonsBreakdown b = simons_identity_residual(surface_of(c), c.x);
    return {std::fabs(b.residual), true, ""};
}

CheckResult chk_shape_spectrum(const CheckContext& c) {
    const std::vector<double>& expected =
        expect(c.target.shape_spectrum, "principal-curvature expectation");
    const SffData s = second_fundamental_form(surface_of(c), c.x, true);
    if (s.shape_eigs.size() != expected.size())
        throw ShapeError("principal-curvature count mismatch");

    // The normal orientation fixes the spectrum only up to a global sign.
    std::vector<double> flipped(expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        flipped[expected.size() - 1 - i] = -expected[i];
    double plus = 0.0, minus = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        plus = std::max(plus, std::fabs(s.shape_eigs[i] - expected[i]));
        minus = std::max(minus, std::fabs(s.shape_eigs[i] - flipped[i]));
    }
    return {std::min(plus, minus), true, ""};
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> defs = {
        {"metric_sanity", CheckMode::Residual, 1e-10, chk_metric_sanity},
        {"metric_parallel", CheckMode::Residual, 1e-5, chk_metric_parallel},
        {"riemann_symmetry", CheckMode::Residual, 1e-6, chk_riemann_symmetry},
        {"contraction_consistency", CheckMode::Residual, 1e-6, chk_contraction_consistency},
        {"scalar_value", CheckMode::Residual, 1e-6, chk_scalar_value},
        {"einstein", CheckMode::Residual, 1e-6, chk_einstein},
        {"const_sec", CheckMode::Residual, 1e-6, chk_const_sec},
        {"operator_spectrum", CheckMode::Bool, 0.0, chk_operator_spectrum},
        {"op_sec_bridge", CheckMode::Residual, 1e-4, chk_op_sec_bridge},
        {"lcf_reconstruction", CheckMode::Residual, 1e-4, chk_lcf_reconstruction},
        {"weyl_nonzero", CheckMode::NegControl, 1e-2, chk_weyl_nonzero},
        {"sec_from_ricci", CheckMode::Residual, 1e-4, chk_sec_from_ricci},
        {"schouten_operator", CheckMode::Residual, 1e-4, chk_schouten_operator},
        {"bochner_hessian", CheckMode::Residual, 1e-4, chk_bochner_hessian},
        {"bochner_ricci", CheckMode::Residual, 1e-4, chk_bochner_ricci},
        {"bochner_spectral_vs_raw", CheckMode::Residual, 1e-8, chk_bochner_spectral_vs_raw},
        {"kato", CheckMode::Gap, 1e-10, chk_kato},
        {"okumura", CheckMode::Gap, 1e-12, chk_okumura},
        {"ricci_pinching_identity", CheckMode::Residual, 1e-6, chk_ricci_pinching_identity},
        {"ricci_pinching_gap", CheckMode::Gap, 1e-8, chk_ricci_pinching_gap},
        {"convergence_order", CheckMode::Bool, 0.0, chk_convergence_order},
        {"sff_minimal", CheckMode::Residual, 1e-8, chk_sff_minimal},
        {"totally_geodesic", CheckMode::Residual, 1e-8, chk_totally_geodesic},
        {"sff_norm", CheckMode::Residual, 1e-5, chk_sff_norm},
        {"sff_codazzi", CheckMode::Residual, 1e-4, chk_sff_codazzi},
        {"sff_divergence", CheckMode::Residual, 1e-4, chk_sff_divergence},
        {"simons", CheckMode::Residual, 1e-4, chk_simons},
        {"shape_spectrum", CheckMode::Residual, 1e-6, chk_shape_spectrum},
    };
    return defs;
}

std::vector<std::string> registry_names() {
    std::vector<std::string> names;
    for (const CheckDef& d : check_registry()) names.push_back(d.name);
    return names;
}

namespace {

const CheckDef& find_check(const std::string& name) {
    for (const CheckDef& d : check_registry())
        if (d.name == name) return d;
    throw ConfigError("unknown check '" + name + "'");
}

Point sample_point(const CatalogTarget& target, SplitMix64& rng) {
    // Wide enough for the deepest stencil chain (outer Laplacian at 2e-2
    // probing field evaluations that reach another 2.4e-2) plus slack.
    const double margin = 0.07 + 3.0 * target.fd.step;
    Point x;
    x.reserve(target.chart.domain.size());
    for (const AxisInterval& iv : target.chart.domain) {
        if (iv.hi - iv.lo <= 2.0 * margin)
            throw ConfigError("target domain too small for the sampling margin");
        x.push_back(rng.uniform(iv.lo + margin, iv.hi - margin));
    }
    return x;
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
    SuiteReport report;
    report.seed = cfg.seed;

    std::vector<std::string> target_names = cfg.targets;
    if (target_names.empty()) target_names = catalog_names();

    for (const auto& [name, ov] : cfg.target_overrides) {
        (void)ov;
        if (std::find(target_names.begin(), target_names.end(), name) == target_names.end())
            throw ConfigError("override for target '" + name + "' which is not in the run");
    }
    for (const auto& [name, ov] : cfg.check_overrides) {
        (void)ov;
        find_check(name);
    }

    for (const std::string& tname : target_names) {
        const CatalogTarget target = make_target(tname);
        report.targets.push_back(
            {target.name, target.chart.dim, target.surface.has_value()});

        const TargetOverride* tov = nullptr;
        if (auto it = cfg.target_overrides.find(tname); it != cfg.target_overrides.end())
            tov = &it->second;

        std::vector<std::string> checks = target.default_checks;
        if (cfg.checks) checks = *cfg.checks;
        if (tov && tov->checks) checks = *tov->checks;

        for (const std::string& cname : checks) {
            const CheckDef& def = find_check(cname);

            double tol = def.tol;
            if (auto it = cfg.check_overrides.find(cname); it != cfg.check_overrides.end())
                if (it->second.tol) tol = *it->second.tol;
            if (auto it = target.tol_override.find(cname); it != target.tol_override.end())
                tol = it->second;

            int points = cfg.points;
            if (auto it = cfg.check_overrides.find(cname); it != cfg.check_overrides.end())
                if (it->second.points) points = *it->second.points;
            if (tov && tov->points) points = *tov->points;

            std::vector<Point> xs;
            if (cfg.strategy == SuiteConfig::Strategy::Fixed) {
                if (!tov || tov->fixed_points.empty())
                    throw ConfigError("strategy=fixed but target '" + tname +
                                      "' has no fixed_point entries");
                xs = tov->fixed_points;
            } else {
                for (int i = 0; i < points; ++i) {
                    SplitMix64 rng(substream_seed(cfg.seed, tname + "/" + cname + "/pt",
                                                  static_cast<std::uint64_t>(i)));
                    xs.push_back(sample_point(target, rng));
                }
            }

            for (std::size_t i = 0; i < xs.size(); ++i) {
                CheckRecord rec;
                rec.target = target.name;
                rec.check = cname;
                rec.point_index = static_cast<int>(i);
                rec.point = xs[i];
                rec.mode = def.mode;
                rec.tol = tol;

                SplitMix64 rng(substream_seed(cfg.seed, tname + "/" + cname + "/run", i));
                try {
                    const CheckResult res = def.fn(CheckContext{target, xs[i], rng});
                    rec.value = res.value;
                    rec.note = res.note;
                    switch (def.mode) {
                        case CheckMode::Residual:
                            rec.status = res.value <= tol ? CheckStatus::Pass : CheckStatus::Fail;
                            break;
                        case CheckMode::Gap:
                            rec.status = res.value >= -tol ? CheckStatus::Pass : CheckStatus::Fail;
                            break;
                        case CheckMode::NegControl:
                            rec.status = res.value > tol ? CheckStatus::Pass : CheckStatus::Fail;
                            break;
                        case CheckMode::Bool:
                            rec.status = res.ok ? CheckStatus::Pass : CheckStatus::Fail;
                            break;
                    }
                    if (def.mode == CheckMode::Bool && !std::isfinite(rec.value))
                        rec.status = CheckStatus::Fail;
                } catch (const PreconditionError& e) {
                    rec.status = CheckStatus::Inapplicable;
                    rec.value = std::numeric_limits<double>::quiet_NaN();
                    rec.note = std::string(e.kind()) + ": " + e.what();
                } catch (const Error& e) {
                    rec.status = CheckStatus::Fail;
                    rec.value = std::numeric_limits<double>::quiet_NaN();
                    rec.note = std::string("error: ") + e.what();
                }
                report.records.push_back(std::move(rec));
            }
        }
    }

    std::sort(report.records.begin(), report.records.end(),
              [](const CheckRecord& a, const CheckRecord& b) {
                  return std::tie(a.target, a.check, a.point_index) <
                         std::tie(b.target, b.check, b.point_index);
              });
    return report;
}

}  // namespace curvcheck
