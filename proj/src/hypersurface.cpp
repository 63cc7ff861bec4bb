#include "curvcheck/hypersurface.hpp"

#include <algorithm>
#include <cmath>

#include "curvcheck/errors.hpp"

namespace curvcheck {

namespace {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Determinant by Gaussian elimination with partial pivoting.
double det(std::vector<Vec> rows) {
    const std::size_t m = rows.size();
    double d = 1.0;
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < m; ++r)
            if (std::fabs(rows[r][c]) > std::fabs(rows[piv][c])) piv = r;
        if (rows[piv][c] == 0.0) return 0.0;
        if (piv != c) {
            std::swap(rows[piv], rows[c]);
            d = -d;
        }
        d *= rows[c][c];
        for (std::size_t r = c + 1; r < m; ++r) {
            const double f = rows[r][c] / rows[c][c];
            for (std::size_t k = c; k < m; ++k) rows[r][k] -= f * rows[c][k];
        }
    }
    return d;
}

/// Generalized cross product in R^{m}: the vector orthogonal to the m-1
/// columns, with components given by alternating minors.  Smooth in the
/// inputs, which keeps the derived normal field differentiable.
Vec cross_complement(const std::vector<Vec>& cols, int m) {
    Vec out(static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
        std::vector<Vec> minor;
        minor.reserve(static_cast<std::size_t>(m) - 1);
        for (int r = 0; r < m; ++r) {
            if (r == i) continue;
            Vec row;
            row.reserve(cols.size());
            for (const Vec& c : cols) row.push_back(c[static_cast<std::size_t>(r)]);
            minor.push_back(std::move(row));
        }
        out[static_cast<std::size_t>(i)] = ((i % 2) == 0 ? 1.0 : -1.0) * det(std::move(minor));
    }
    return out;
}

Vec immersion_at(const Hypersurface& h, const Point& u, int ambient) {
    Vec f = h.immersion(u);
    if (static_cast<int>(f.size()) != ambient)
        throw ShapeError("immersion must map into R^(dim+2)");
    for (double v : f)
        if (!std::isfinite(v)) throw DegenerateImmersionError("immersion value is not finite");
    return f;
}

struct Frame {
    Vec position;
    std::vector<Vec> jacobian;  ///< jacobian[a] = d_a F
    Vec normal;                 ///< unit, orthogonal to the jacobian and the position
    SymMatrix induced;
};

Frame frame_at(const Hypersurface& h, const Point& u, const FdSpec& fd) {
    const int n = h.dim;
    const int ambient = n + 2;
    Frame fr;
    fr.position = immersion_at(h, u, ambient);

    const double off_sphere = std::fabs(dot(fr.position, fr.position) - 1.0);
    if (off_sphere > 1e-8)
        throw DegenerateImmersionError("immersion does not land on the unit sphere");

    const auto f = [&](const Point& y) {
        Vec v = immersion_at(h, y, ambient);
        DenseTensor t(1, ambient);
        for (int i = 0; i < ambient; ++i) t.at({i}) = v[static_cast<std::size_t>(i)];
        return t;
    };
    fr.jacobian.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        const DenseTensor d = central_diff1(f, u, a, fd);
        Vec col(static_cast<std::size_t>(ambient), 0.0);
        for (int i = 0; i < ambient; ++i) col[static_cast<std::size_t>(i)] = d.at({i});
        fr.jacobian[static_cast<std::size_t>(a)] = std::move(col);
    }

    fr.induced = SymMatrix(n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            fr.induced.set(a, b, dot(fr.jacobian[static_cast<std::size_t>(a)],
                                     fr.jacobian[static_cast<std::size_t>(b)]));

    std::vector<Vec> cols = fr.jacobian;
    cols.push_back(fr.position);
    Vec nu = cross_complement(cols, ambient);
    double scale = 1.0;
    for (const Vec& c : cols) scale *= std::max(std::sqrt(dot(c, c)), 1e-300);
    const double len = std::sqrt(dot(nu, nu));
    if (len <= 1e-10 * scale)
        throw DegenerateImmersionError("differential of the immersion degenerates");
    const double sign = h.flip_normal ? -1.0 : 1.0;
    for (double& v : nu) v *= sign / len;
    fr.normal = std::move(nu);
    return fr;
}

}  // namespace

SffData second_fundamental_form(const Hypersurface& h, const Point& u, bool refine) {
    const int n = h.dim;
    const int ambient = n + 2;
    const FdSpec fd{h.step, refine};
    check_margin(ChartManifold{n, h.domain, {}, h.name, false}, u, 3.0 * h.step);

    const Frame fr = frame_at(h, u, fd);

    const auto f = [&](const Point& y) {
        Vec v = immersion_at(h, y, ambient);
        DenseTensor t(1, ambient);
        for (int i = 0; i < ambient; ++i) t.at({i}) = v[static_cast<std::size_t>(i)];
        return t;
    };

    SffData out;
    out.induced = fr.induced;
    out.normal = fr.normal;
    out.sff = SymMatrix(n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            const DenseTensor d2 = (a == b) ? central_diff2_same(f, u, a, fd)
                                            : central_diff2_mixed(f, u, a, b, fd);
            double s = 0.0;
            for (int i = 0; i < ambient; ++i)
                s += d2.at({i}) * fr.normal[static_cast<std::size_t>(i)];
            out.sff.set(a, b, s);
        }

    const Cholesky chol = Cholesky::factor(out.induced);
    const SymMatrix g_inv = chol.inverse();
    double mean = 0.0, norm_sq = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            mean += g_inv(a, b) * out.sff(a, b);
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    norm_sq += g_inv(a, c) * g_inv(b, d) * out.sff(a, b) * out.sff(c, d);
        }
    out.mean = mean;
    out.norm_sq = norm_sq;
    out.shape_eigs = generalized_eigen(out.sff, out.induced).values;
    return out;
}

ChartManifold induced_chart(const Hypersurface& h) {
    ChartManifold chart;
    chart.dim = h.dim;
    chart.domain = h.domain;
    chart.name = h.name;
    chart.flat = false;
    const Hypersurface copy = h;
    chart.metric_eval = [copy](const Point& u) {
        // The induced metric gets differentiated twice by curvature
        // evaluations, which amplify its round-off by 1/step^2 while its
        // smooth truncation stays benign; a coarse refined Jacobian stencil
        // therefore minimizes the noise the curvature stencils see.
        const FdSpec fd{std::max(copy.step, 1e-2), true};
        return frame_at(copy, u, fd).induced;
    };
    return chart;
}

SymTensorField sff_field(const Hypersurface& h) {
    SymTensorField field;
    field.rank = 2;
    field.name = h.name + ":sff";
    const Hypersurface copy = h;
    field.eval = [copy](const Point& u) {
        return second_fundamental_form(copy, u, false).sff.to_tensor();
    };
    return field;
}

SimonsBreakdown simons_identity_residual(const Hypersurface& h, const Point& u,
                                         double minimal_tol, double lap_step) {
    const int n = h.dim;
    const SffData refined = second_fundamental_form(h, u, true);
    if (std::fabs(refined.mean) > minimal_tol)
        throw NotMinimalError("hypersurface is not minimal at the evaluation point");

    const ChartManifold chart = induced_chart(h);
    const SymTensorField field = sff_field(h);
    const FdSpec fd{h.step, false};

    SimonsBreakdown out;
    out.mean = refined.mean;
    out.norm_sq = refined.norm_sq;

    const auto norm_sq_plain = [&](const Point& y) {
        return second_fundamental_form(h, y, false).norm_sq;
    };
    out.lhs = 0.5 * laplace_beltrami(norm_sq_plain, chart, u, FdSpec{lap_step, false});

    const PointGeometry geom = point_geometry(chart, u, fd);
    const DenseTensor grad = covariant_derivative(field, chart, u, fd);
    out.grad_sq = tensor_norm_sq(grad, geom.g);
    out.q_term = refined.norm_sq * (n - refined.norm_sq);
    out.residual = out.lhs - out.grad_sq - out.q_term;
    return out;
}

}  // namespace curvcheck
