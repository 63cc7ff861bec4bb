#include "curvcheck/chart.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace curvcheck {

void check_margin(const ChartManifold& chart, const Point& x, double margin) {
    if (static_cast<int>(x.size()) != chart.dim) {
        throw ShapeError("point dim " + std::to_string(x.size()) + " against chart dim " +
                         std::to_string(chart.dim));
    }
    for (int i = 0; i < chart.dim; ++i) {
        const AxisInterval& ax = chart.domain[static_cast<std::size_t>(i)];
        double xi = x[static_cast<std::size_t>(i)];
        if (xi - ax.lo < margin || ax.hi - xi < margin) {
            throw BoundaryMarginError("point within " + std::to_string(margin) +
                                      " of the boundary of chart " + chart.name + " on axis " +
                                      std::to_string(i));
        }
    }
}

SymMatrix metric_at(const ChartManifold& chart, const Point& x) {
    SymMatrix g = chart.metric_eval(x);
    if (g.dim() != chart.dim) throw ShapeError("metric evaluator dim mismatch on " + chart.name);
    for (int i = 0; i < g.dim(); ++i) {
        for (int j = 0; j < g.dim(); ++j) {
            if (!std::isfinite(g(i, j))) {
                throw SingularMetricError("non-finite metric entry on " + chart.name);
            }
        }
    }
    return g;
}

namespace {

/// Gamma^k_ij at x; reuses precomputed metric derivatives when available.
DenseTensor christoffel_impl(const ChartManifold& chart, const Point& x, const FdSpec& fd) {
    const int n = chart.dim;
    const SymMatrix g_inv = Cholesky::factor(metric_at(chart, x)).inverse();
    auto ev = [&](const Point& y) { return metric_at(chart, y); };
    std::vector<SymMatrix> dg;
    dg.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dg.push_back(central_diff1(ev, x, i, fd));

    DenseTensor gamma(3, n);
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                double s = 0.0;
                for (int l = 0; l < n; ++l) {
                    s += g_inv(k, l) * (dg[static_cast<std::size_t>(i)](l, j) +
                                        dg[static_cast<std::size_t>(j)](l, i) -
                                        dg[static_cast<std::size_t>(l)](i, j));
                }
                s *= 0.5;
                gamma.at({k, i, j}) = s;
                gamma.at({k, j, i}) = s;
            }
        }
    }
    return gamma;
}

}  // namespace

DenseTensor christoffel(const ChartManifold& chart, const Point& x, const FdSpec& fd) {
    check_margin(chart, x, 3.0 * fd.step);
    return christoffel_impl(chart, x, fd);
}

PointGeometry point_geometry(const ChartManifold& chart, const Point& x, const FdSpec& fd) {
    check_margin(chart, x, 3.0 * fd.step);
    const int n = chart.dim;

    PointGeometry pg;
    pg.x = x;
    pg.dim = n;
    pg.g = metric_at(chart, x);
    pg.g_inv = Cholesky::factor(pg.g).inverse();
    pg.gamma = christoffel_impl(chart, x, fd);

    auto gamma_ev = [&](const Point& y) { return christoffel_impl(chart, y, fd); };
    std::vector<DenseTensor> dgamma;
    dgamma.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dgamma.push_back(central_diff1(gamma_ev, x, i, fd));

    // R^k_{lij} = d_i Gamma^k_{jl} - d_j Gamma^k_{il}
    //             + Gamma^k_{im} Gamma^m_{jl} - Gamma^k_{jm} Gamma^m_{il}
    pg.riemann_up = DenseTensor(4, n);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    double s = dgamma[static_cast<std::size_t>(i)].at({k, j, l}) -
                               dgamma[static_cast<std::size_t>(j)].at({k, i, l});
                    for (int m = 0; m < n; ++m) {
                        s += pg.gamma.at({k, i, m}) * pg.gamma.at({m, j, l}) -
                             pg.gamma.at({k, j, m}) * pg.gamma.at({m, i, l});
                    }
                    pg.riemann_up.at({k, l, i, j}) = s;
                }
            }
        }
    }

    pg.riemann_low = DenseTensor(4, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    double s = 0.0;
                    for (int m = 0; m < n; ++m) {
                        s += pg.g(k, m) * pg.riemann_up.at({m, l, i, j});
                    }
                    pg.riemann_low.at({i, j, k, l}) = s;
                }
            }
        }
    }

    DenseTensor ricci_raw(2, n);
    for (int l = 0; l < n; ++l) {
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += pg.riemann_up.at({k, l, k, j});
            ricci_raw.at({l, j}) = s;
        }
    }
    pg.ricci = SymMatrix(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            pg.ricci_asymmetry =
                std::max(pg.ricci_asymmetry, std::fabs(ricci_raw.at({i, j}) - ricci_raw.at({j, i})));
            pg.ricci.set(i, j, 0.5 * (ricci_raw.at({i, j}) + ricci_raw.at({j, i})));
        }
    }

    pg.scalar = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pg.scalar += pg.g_inv(i, j) * pg.ricci(i, j);

    return pg;
}

DenseTensor covariant_derivative(const SymTensorField& field, const ChartManifold& chart,
                                 const Point& x, const FdSpec& fd) {
    check_margin(chart, x, 3.0 * fd.step);
    const int n = chart.dim;
    const int p = field.rank;
    if (p < 1) throw ShapeError("covariant derivative of rank-0 field");

    const DenseTensor t = field.eval(x);
    if (t.rank() != p || t.dim() != n) throw ShapeError("field evaluator shape mismatch");
    const DenseTensor gamma = christoffel_impl(chart, x, fd);

    std::vector<DenseTensor> dt;
    dt.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dt.push_back(central_diff1(field.eval, x, i, fd));

    DenseTensor out(p + 1, n);
    std::vector<int> ks(static_cast<std::size_t>(p));
    std::vector<int> full(static_cast<std::size_t>(p + 1));
    std::vector<int> sub(static_cast<std::size_t>(p));
    for_each_index(p + 1, n, [&](const std::vector<int>& idx) {
        const int i = idx[0];
        for (int a = 0; a < p; ++a) ks[static_cast<std::size_t>(a)] = idx[static_cast<std::size_t>(a + 1)];
        double s = dt[static_cast<std::size_t>(i)].at(ks);
        for (int a = 0; a < p; ++a) {
            sub = ks;
            for (int m = 0; m < n; ++m) {
                sub[static_cast<std::size_t>(a)] = m;
                s -= gamma.at({m, i, ks[static_cast<std::size_t>(a)]}) * t.at(sub);
            }
        }
        out.at(idx) = s;
        (void)full;
    });
    return out;
}

DenseTensor divergence(const SymTensorField& field, const ChartManifold& chart, const Point& x,
                       const FdSpec& fd) {
    const int n = chart.dim;
    const int p = field.rank;
    const DenseTensor cov = covariant_derivative(field, chart, x, fd);
    const SymMatrix g_inv = Cholesky::factor(metric_at(chart, x)).inverse();

    DenseTensor out(p - 1, p - 1 == 0 ? 1 : n);
    std::vector<int> src(static_cast<std::size_t>(p + 1));
    for_each_index(p - 1, n, [&](const std::vector<int>& rest) {
        for (int a = 0; a < p - 1; ++a) src[static_cast<std::size_t>(a + 2)] = rest[static_cast<std::size_t>(a)];
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int m = 0; m < n; ++m) {
                src[0] = i;
                src[1] = m;
                s += g_inv(i, m) * cov.at(src);
            }
        }
        out.at(rest) = -s;
    });
    return out;
}

double laplace_beltrami(const ScalarField& f, const ChartManifold& chart, const Point& x,
                        const FdSpec& fd) {
    check_margin(chart, x, 3.0 * fd.step);
    const int n = chart.dim;
    const SymMatrix g_inv = Cholesky::factor(metric_at(chart, x)).inverse();
    // First-derivative ingredients stay at the fine step even when the caller
    // widens the stencil for the second differences of a noisy scalar.
    const FdSpec inner{std::min(fd.step, 1e-4), fd.richardson};
    const DenseTensor gamma = christoffel_impl(chart, x, inner);

    std::vector<double> df(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) df[static_cast<std::size_t>(i)] = central_diff1(f, x, i, inner);

    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (g_inv(i, j) == 0.0) continue;
            double d2 = (i == j) ? central_diff2_same(f, x, i, fd)
                                 : central_diff2_mixed(f, x, i, j, fd);
            double corr = 0.0;
            for (int k = 0; k < n; ++k) corr += gamma.at({k, i, j}) * df[static_cast<std::size_t>(k)];
            acc += g_inv(i, j) * (d2 - corr);
        }
    }
    return acc;
}

double field_norm_sq(const SymTensorField& field, const ChartManifold& chart, const Point& x) {
    const DenseTensor t = field.eval(x);
    const SymMatrix g = metric_at(chart, x);
    return tensor_norm_sq(t, g);
}

}  // namespace curvcheck
