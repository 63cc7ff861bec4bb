#include "curvcheck/weitzenbock.hpp"

#include <algorithm>
#include <cmath>

#include "curvcheck/codazzi.hpp"
#include "curvcheck/conformal.hpp"
#include "curvcheck/curvature_operator.hpp"
#include "curvcheck/errors.hpp"

namespace curvcheck {

double bochner_q_raw(const PointGeometry& geom, const DenseTensor& t) {
    const int p = t.rank();
    const int n = geom.dim;
    if (p < 2) throw ShapeError("bochner_q_raw needs a tensor of rank >= 2");
    if (t.dim() != n) throw ShapeError("bochner_q_raw: tensor dimension mismatch");

    const DenseTensor up = raise_all(t, geom.g);                     // all slots raised
    const DenseTensor mixed1 = adjust_index(t, 0, geom.g, IndexDir::Raise);
    DenseTensor mixed2 = adjust_index(mixed1, 1, geom.g, IndexDir::Raise);

    // term1 = Ric_ij T^{i k2..kp} T^j_{k2..kp}
    double term1 = 0.0;
    for_each_index(p, n, [&](const std::vector<int>& idx) {
        std::vector<int> jdx(idx.begin(), idx.end());
        const double a = up.at(std::span<const int>(idx));
        if (a == 0.0) return;
        for (int j = 0; j < n; ++j) {
            jdx[0] = j;
            term1 += geom.ricci(idx[0], j) * a * mixed1.at(std::span<const int>(jdx));
        }
    });

    // term2 = R_ijkl T^{ik k3..kp} T^{jl}_{k3..kp}
    double term2 = 0.0;
    for_each_index(p, n, [&](const std::vector<int>& idx) {
        std::vector<int> jdx(idx.begin(), idx.end());
        const double a = up.at(std::span<const int>(idx));
        if (a == 0.0) return;
        const int i = idx[0];
        const int k = idx[1];
        for (int j = 0; j < n; ++j) {
            jdx[0] = j;
            for (int l = 0; l < n; ++l) {
                jdx[1] = l;
                term2 += geom.riemann_low.at({i, j, k, l}) * a *
                         mixed2.at(std::span<const int>(jdx));
            }
        }
    });

    return term1 - static_cast<double>(p - 1) * term2;
}

double bochner_q(const SymTensorField& field, const ChartManifold& chart, const Point& x,
                 const FdSpec& fd, double traceless_tol) {
    const PointGeometry geom = point_geometry(chart, x, fd);
    const DenseTensor t = field.eval(x);
    const DenseTensor tr = trace_first_two(t, geom.g);
    const double scale = std::max(1.0, std::sqrt(tensor_norm_sq(t, geom.g)));
    if (tr.max_abs() > traceless_tol * scale)
        throw NonTracelessError("field has nonzero trace at the evaluation point");
    return bochner_q_raw(geom, t);
}

double bochner_q_spectral(const PointGeometry& geom, const SymMatrix& t) {
    const int n = geom.dim;
    if (t.dim() != n) throw ShapeError("bochner_q_spectral: matrix dimension mismatch");

    // Gate: the endomorphisms g^{-1} T and g^{-1} Ric must commute, otherwise
    // no shared eigenbasis exists and the spectral form is undefined.
    std::vector<double> tu(static_cast<std::size_t>(n) * n, 0.0);
    std::vector<double> ru(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double st = 0.0, sr = 0.0;
            for (int m = 0; m < n; ++m) {
                st += geom.g_inv(i, m) * t(m, j);
                sr += geom.g_inv(i, m) * geom.ricci(m, j);
            }
            tu[static_cast<std::size_t>(i) * n + j] = st;
            ru[static_cast<std::size_t>(i) * n + j] = sr;
        }
    double comm = 0.0, tnorm = 0.0, rnorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double c = 0.0;
            for (int m = 0; m < n; ++m)
                c += tu[static_cast<std::size_t>(i) * n + m] * ru[static_cast<std::size_t>(m) * n + j] -
                     ru[static_cast<std::size_t>(i) * n + m] * tu[static_cast<std::size_t>(m) * n + j];
            comm += c * c;
            tnorm += tu[static_cast<std::size_t>(i) * n + j] * tu[static_cast<std::size_t>(i) * n + j];
            rnorm += ru[static_cast<std::size_t>(i) * n + j] * ru[static_cast<std::size_t>(i) * n + j];
        }
    const double gate = 1e-8 * std::sqrt(tnorm) * std::sqrt(rnorm);
    if (std::sqrt(comm) > gate)
        throw NonCommutingError("tensor does not commute with Ricci at the evaluation point");

    const EigenSystem es = generalized_eigen(t, geom.g);
    double q = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d = es.values[static_cast<std::size_t>(i)] -
                             es.values[static_cast<std::size_t>(j)];
            if (d == 0.0) continue;
            q += sectional_curvature(geom, es.vectors[static_cast<std::size_t>(i)],
                                     es.vectors[static_cast<std::size_t>(j)]) *
                 d * d;
        }
    return q;
}

BochnerBreakdown bochner_breakdown(const SymTensorField& field, const ChartManifold& chart,
                                   const Point& x, const FdSpec& fd, const BochnerOptions& opt) {
    const PointGeometry geom = point_geometry(chart, x, fd);
    const DenseTensor t = field.eval(x);
    const int p = t.rank();
    if (p < 2) throw ShapeError("bochner_breakdown needs a tensor field of rank >= 2");

    const double cres = codazzi_residual(field, chart, x, fd);
    if (cres > opt.codazzi_tol)
        throw NotCodazziError("field is not Codazzi at the evaluation point");

    const DenseTensor tr = trace_first_two(t, geom.g);
    const bool traceless = tr.max_abs() <= opt.trace_tol;
    if (!traceless) {
        if (p != 2)
            throw NonTracelessError("higher-rank field has nonzero trace");
        // p = 2 alternative gate: constant trace (the curvature term is
        // insensitive to a constant pure-trace part).
        const auto tau = [&](const Point& y) {
            return trace_first_two(field.eval(y), metric_at(chart, y)).at({});
        };
        double dmax = 0.0;
        for (int axis = 0; axis < chart.dim; ++axis)
            dmax = std::max(dmax, std::fabs(central_diff1(tau, x, axis, fd)));
        if (dmax > opt.trace_tol)
            throw NonTracelessError("field trace is neither zero nor constant");
    }

    BochnerBreakdown out;
    const auto norm_sq = [&](const Point& y) { return field_norm_sq(field, chart, y); };
    out.lhs = 0.5 * laplace_beltrami(norm_sq, chart, x, FdSpec{opt.lap_step, fd.richardson});
    out.q_term = bochner_q_raw(geom, t);
    const DenseTensor grad = covariant_derivative(field, chart, x, fd);
    out.grad_term = tensor_norm_sq(grad, geom.g);
    out.residual = out.lhs - out.q_term - out.grad_term;
    return out;
}

KatoGap kato_gap(const SymTensorField& field, const ChartManifold& chart, const Point& x,
                 double step) {
    const FdSpec fd{step, false};
    const PointGeometry geom = point_geometry(chart, x, fd);
    const double norm0 = std::sqrt(field_norm_sq(field, chart, x));
    if (norm0 < 1e-6)
        throw VanishingNormError("field norm too small for a stable Kato gap");

    KatoGap out;
    const DenseTensor grad = covariant_derivative(field, chart, x, fd);
    out.grad_sq = tensor_norm_sq(grad, geom.g);
    const auto norm_of = [&](const Point& y) { return std::sqrt(field_norm_sq(field, chart, y)); };
    std::vector<double> dn(static_cast<std::size_t>(chart.dim), 0.0);
    for (int axis = 0; axis < chart.dim; ++axis)
        dn[static_cast<std::size_t>(axis)] = central_diff1(norm_of, x, axis, fd);
    double s = 0.0;
    for (int i = 0; i < chart.dim; ++i)
        for (int j = 0; j < chart.dim; ++j) s += geom.g_inv(i, j) * dn[i] * dn[j];
    out.dnorm_sq = s;
    out.gap = out.grad_sq - out.dnorm_sq;
    return out;
}

double okumura_gap(const SymMatrix& traceless) {
    const int n = traceless.dim();
    if (n < 2) throw DimensionError("cubic-trace bound needs dimension >= 2");
    if (std::fabs(traceless.trace()) > 1e-10 * std::max(1.0, traceless.max_abs()))
        throw NonTracelessError("cubic-trace bound needs a traceless matrix");
    double tr3 = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) tr3 += traceless(i, j) * traceless(j, k) * traceless(k, i);
    const double nf = traceless.frobenius();
    const double c = (n - 2.0) / std::sqrt(n * (n - 1.0));
    return tr3 + c * nf * nf * nf;
}

PinchingResult ricci_pinching(const PointGeometry& geom, double lcf_tol) {
    const int n = geom.dim;
    if (n < 4) throw DimensionError("Ricci pinching control needs dimension >= 4");
    const double wnorm = weyl_norm(geom);
    const double scale = std::max(1.0, std::fabs(geom.scalar));
    if (wnorm > lcf_tol * scale)
        throw NotConformallyFlatError("Weyl part does not vanish at the evaluation point");

    // Traceless Ricci part E.
    SymMatrix e(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            e.set(i, j, geom.ricci(i, j) - geom.scalar / n * geom.g(i, j));

    // ||E||^2 and tr(E^3) with respect to g (raise one slot).
    std::vector<double> eu(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int m = 0; m < n; ++m) s += geom.g_inv(i, m) * e(m, j);
            eu[static_cast<std::size_t>(i) * n + j] = s;
        }
    double norm_sq = 0.0, tr3 = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            norm_sq += eu[static_cast<std::size_t>(i) * n + j] * eu[static_cast<std::size_t>(j) * n + i];
            for (int k = 0; k < n; ++k)
                tr3 += eu[static_cast<std::size_t>(i) * n + j] * eu[static_cast<std::size_t>(j) * n + k] *
                       eu[static_cast<std::size_t>(k) * n + i];
        }

    const double q = bochner_q_raw(geom, e.to_tensor());
    const double closed = geom.scalar * norm_sq / (n - 1.0) + n / (n - 2.0) * tr3;
    const double bound =
        norm_sq * (geom.scalar - std::sqrt(n * (n - 1.0)) * std::sqrt(norm_sq)) / (n - 1.0);

    PinchingResult out;
    out.identity_residual = std::fabs(q - closed);
    out.gap = q - bound;
    return out;
}

}  // namespace curvcheck
