#include "curvcheck/codazzi.hpp"

#include <cmath>
#include <utility>

namespace curvcheck {

double codazzi_residual(const SymTensorField& field, const ChartManifold& chart, const Point& x,
                        const FdSpec& fd) {
    if (field.rank < 2) throw ShapeError("Codazzi residual needs rank >= 2");
    const DenseTensor cov = covariant_derivative(field, chart, x, fd);
    const int n = chart.dim;
    const int r = cov.rank();
    double res = 0.0;
    std::vector<int> swapped;
    for_each_index(r, n, [&](const std::vector<int>& idx) {
        if (idx[0] <= idx[1]) return;
        swapped = idx;
        std::swap(swapped[0], swapped[1]);
        res = std::max(res, std::fabs(cov.at(idx) - cov.at(swapped)));
    });
    return res;
}

DenseTensor codazzi_differential(const SymTensorField& field, const ChartManifold& chart,
                                 const Point& x, const FdSpec& fd) {
    if (field.rank != 2) throw ShapeError("d^nabla is provided for 2-tensor fields");
    const DenseTensor cov = covariant_derivative(field, chart, x, fd);
    const int n = chart.dim;
    DenseTensor out(3, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                out.at({i, j, k}) = cov.at({i, j, k}) - cov.at({j, i, k});
    return out;
}

CodazziDiagnostics harmonicity_diagnostics(const SymTensorField& field, const ChartManifold& chart,
                                           const Point& x, const FdSpec& fd, double tol) {
    if (field.rank != 2) throw ShapeError("harmonicity diagnostics need a 2-tensor field");
    const SymMatrix g = metric_at(chart, x);

    CodazziDiagnostics d;
    const DenseTensor cov = covariant_derivative(field, chart, x, fd);
    const int n = chart.dim;
    DenseTensor dnab(3, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                dnab.at({i, j, k}) = cov.at({i, j, k}) - cov.at({j, i, k});
    d.codazzi_res = dnab.max_abs();
    d.d_nabla_norm = std::sqrt(std::fabs(tensor_norm_sq(dnab, g)));

    const DenseTensor t = field.eval(x);
    d.trace_norm = std::fabs(trace_first_two(t, g)[0]);

    const DenseTensor div = divergence(field, chart, x, fd);
    d.divergence_norm = std::sqrt(std::fabs(tensor_norm_sq(div, g)));

    d.harmonic = d.d_nabla_norm <= tol && d.divergence_norm <= tol;

    // delta T = -d(trace_g T) for Codazzi 2-tensors; report the residual of
    // that identity (only meaningful when the field is Codazzi).
    ScalarField tr = trace_scalar(field, chart);
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        double dk = central_diff1(tr, x, k, fd);
        worst = std::max(worst, std::fabs(div.at({k}) + dk));
    }
    d.div_trace_residual = worst;
    return d;
}

SymTensorField metric_multiple_field(const ChartManifold& chart, double lambda) {
    SymTensorField f;
    f.rank = 2;
    f.name = "metric*" + std::to_string(lambda);
    auto metric = chart.metric_eval;
    f.eval = [metric, lambda](const Point& x) { return (metric(x) * lambda).to_tensor(); };
    return f;
}

SymTensorField hessian_field(const ChartManifold& chart, ScalarField fn, const std::string& name,
                             double step) {
    if (!chart.flat) {
        throw UnsupportedConstructionError(
            "Hessian fields are only Codazzi on flat charts; chart " + chart.name +
            " is not declared flat");
    }
    SymTensorField f;
    f.rank = 2;
    f.name = name;
    const int n = chart.dim;
    const FdSpec fd{step, false};
    f.eval = [fn = std::move(fn), n, fd](const Point& x) {
        DenseTensor t(2, n);
        for (int i = 0; i < n; ++i) {
            t.at({i, i}) = central_diff2_same(fn, x, i, fd);
            for (int j = i + 1; j < n; ++j) {
                double v = central_diff2_mixed(fn, x, i, j, fd);
                t.at({i, j}) = v;
                t.at({j, i}) = v;
            }
        }
        return t;
    };
    return f;
}

SymTensorField ricci_field(const ChartManifold& chart, FdSpec geom_fd) {
    SymTensorField f;
    f.rank = 2;
    f.name = "ricci(" + chart.name + ")";
    f.eval = [chart, geom_fd](const Point& x) {
        return point_geometry(chart, x, geom_fd).ricci.to_tensor();
    };
    return f;
}

SymTensorField traceless_part(const SymTensorField& field, const ChartManifold& chart) {
    if (field.rank != 2) throw ShapeError("traceless part is provided for 2-tensor fields");
    SymTensorField f;
    f.rank = 2;
    f.name = field.name + "-traceless";
    auto metric = chart.metric_eval;
    auto eval = field.eval;
    const int n = chart.dim;
    f.eval = [metric, eval, n](const Point& x) {
        const DenseTensor t = eval(x);
        const SymMatrix g = metric(x);
        const double tau = trace_first_two(t, g)[0];
        return t - g.to_tensor() * (tau / static_cast<double>(n));
    };
    return f;
}

ScalarField trace_scalar(const SymTensorField& field, const ChartManifold& chart) {
    if (field.rank != 2) throw ShapeError("trace scalar is provided for 2-tensor fields");
    auto metric = chart.metric_eval;
    auto eval = field.eval;
    return [metric, eval](const Point& x) {
        return trace_first_two(eval(x), metric(x))[0];
    };
}

}  // namespace curvcheck
