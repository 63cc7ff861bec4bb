#pragma once

#include <functional>
#include <string>
#include <vector>

#include "curvcheck/tensor.hpp"

namespace curvcheck {

using Point = std::vector<double>;

struct AxisInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Second-order central differences with step `step`; `richardson` adds one
/// extrapolation level (recomputes at step/2, cancels the h^2 error term).
struct FdSpec {
    double step = 1e-4;
    bool richardson = false;
};

/// A coordinate chart with a smooth metric evaluator.  `domain` is the box of
/// admissible evaluation points; `flat` marks charts whose metric is known to
/// have vanishing curvature (enables Hessian field construction).
struct ChartManifold {
    int dim = 0;
    std::vector<AxisInterval> domain;
    std::function<SymMatrix(const Point&)> metric_eval;
    std::string name;
    bool flat = false;
};

/// Symmetric covariant p-tensor field given by a pointwise evaluator.
struct SymTensorField {
    int rank = 2;
    std::function<DenseTensor(const Point&)> eval;
    std::string name;
};

using ScalarField = std::function<double(const Point&)>;

/// All curvature data of a chart at one point.
///
/// Conventions (pinned once, used everywhere):
///   gamma[k][i][j]        = Gamma^k_ij
///   riemann_up[k][l][i][j] = R^k_{lij},  R^k_{lij} X^l = (D_i D_j - D_j D_i) X^k
///   riemann_low[i][j][k][l] = g_{km} R^m_{lij}
/// so that sec(X, Y) = riemann_low_{ijkl} X^i Y^j X^k Y^l for orthonormal X, Y
/// and the round unit sphere has sectional curvature +1.
struct PointGeometry {
    Point x;
    int dim = 0;
    SymMatrix g;
    SymMatrix g_inv;
    DenseTensor gamma;
    DenseTensor riemann_up;
    DenseTensor riemann_low;
    SymMatrix ricci;
    double ricci_asymmetry = 0.0;  ///< max |raw R_ij - raw R_ji| before symmetrization
    double scalar = 0.0;
};

/// Throws BoundaryMarginError unless x keeps `margin` distance to the domain
/// boundary along every axis.
void check_margin(const ChartManifold& chart, const Point& x, double margin);

/// Metric at x (evaluates the chart closure and validates the shape).
SymMatrix metric_at(const ChartManifold& chart, const Point& x);

/// Christoffel symbols Gamma^k_ij at x from central differences of the metric.
DenseTensor christoffel(const ChartManifold& chart, const Point& x, const FdSpec& fd);

/// Full curvature package at x.
PointGeometry point_geometry(const ChartManifold& chart, const Point& x, const FdSpec& fd);

/// Covariant derivative of a symmetric p-tensor field; the result has rank
/// p + 1 with the derivative slot first:
///   (grad T)_{i k1..kp} = d_i T_{k1..kp} - sum_a Gamma^m_{i ka} T_{k1..m..kp}.
DenseTensor covariant_derivative(const SymTensorField& field, const ChartManifold& chart,
                                 const Point& x, const FdSpec& fd);

/// Divergence with the sign convention (delta T)_{k2..kp} = -g^{im} (grad T)_{i m k2..kp}.
DenseTensor divergence(const SymTensorField& field, const ChartManifold& chart, const Point& x,
                       const FdSpec& fd);

/// Laplace-Beltrami operator on scalars, g^{ij}(d_i d_j f - Gamma^k_ij d_k f).
double laplace_beltrami(const ScalarField& f, const ChartManifold& chart, const Point& x,
                        const FdSpec& fd);

/// ||T(x)||_g^2 for a field, evaluating metric and field at the same point.
double field_norm_sq(const SymTensorField& field, const ChartManifold& chart, const Point& x);

// -- generic central-difference helpers (value type needs +, -, *double) -----

template <class F>
auto central_diff1_plain(F&& f, const Point& x, int axis, double h) {
    Point xp = x, xm = x;
    xp[static_cast<std::size_t>(axis)] += h;
    xm[static_cast<std::size_t>(axis)] -= h;
    return (f(xp) - f(xm)) * (1.0 / (2.0 * h));
}

/// First partial derivative along `axis`.
template <class F>
auto central_diff1(F&& f, const Point& x, int axis, const FdSpec& fd) {
    auto d = central_diff1_plain(f, x, axis, fd.step);
    if (!fd.richardson) return d;
    auto d2 = central_diff1_plain(f, x, axis, fd.step / 2.0);
    return d2 * (4.0 / 3.0) - d * (1.0 / 3.0);
}

template <class F>
auto central_diff2_same_plain(F&& f, const Point& x, int axis, double h) {
    Point xp = x, xm = x;
    xp[static_cast<std::size_t>(axis)] += h;
    xm[static_cast<std::size_t>(axis)] -= h;
    return (f(xp) - f(x) * 2.0 + f(xm)) * (1.0 / (h * h));
}

/// Second partial derivative along one axis.
template <class F>
auto central_diff2_same(F&& f, const Point& x, int axis, const FdSpec& fd) {
    auto d = central_diff2_same_plain(f, x, axis, fd.step);
    if (!fd.richardson) return d;
    auto d2 = central_diff2_same_plain(f, x, axis, fd.step / 2.0);
    return d2 * (4.0 / 3.0) - d * (1.0 / 3.0);
}

template <class F>
auto central_diff2_mixed_plain(F&& f, const Point& x, int a, int b, double h) {
    Point xpp = x, xpm = x, xmp = x, xmm = x;
    xpp[static_cast<std::size_t>(a)] += h;
    xpp[static_cast<std::size_t>(b)] += h;
    xpm[static_cast<std::size_t>(a)] += h;
    xpm[static_cast<std::size_t>(b)] -= h;
    xmp[static_cast<std::size_t>(a)] -= h;
    xmp[static_cast<std::size_t>(b)] += h;
    xmm[static_cast<std::size_t>(a)] -= h;
    xmm[static_cast<std::size_t>(b)] -= h;
    return (f(xpp) - f(xpm) - f(xmp) + f(xmm)) * (1.0 / (4.0 * h * h));
}

/// Mixed second partial derivative along two distinct axes.
template <class F>
auto central_diff2_mixed(F&& f, const Point& x, int a, int b, const FdSpec& fd) {
    auto d = central_diff2_mixed_plain(f, x, a, b, fd.step);
    if (!fd.richardson) return d;
    auto d2 = central_diff2_mixed_plain(f, x, a, b, fd.step / 2.0);
    return d2 * (4.0 / 3.0) - d * (1.0 / 3.0);
}

}  // namespace curvcheck
