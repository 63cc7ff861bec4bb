#pragma once

#include "curvcheck/chart.hpp"

namespace curvcheck {

/// A p-tensor field is Codazzi when its covariant derivative is symmetric in
/// the derivative slot against the first tensor slot.  The residual below is
/// the max-norm of that antisymmetry; d^nabla is the same antisymmetrization
/// kept as a tensor (rank 3, 2-tensor fields only).
double codazzi_residual(const SymTensorField& field, const ChartManifold& chart, const Point& x,
                        const FdSpec& fd);

/// (d^nabla T)_{ijk} = (grad T)_{ijk} - (grad T)_{jik} for a 2-tensor field.
DenseTensor codazzi_differential(const SymTensorField& field, const ChartManifold& chart,
                                 const Point& x, const FdSpec& fd);

struct CodazziDiagnostics {
    double codazzi_res = 0.0;       ///< max-norm Codazzi antisymmetry
    double trace_norm = 0.0;        ///< |g-trace of T|
    double divergence_norm = 0.0;   ///< g-norm of delta T
    double d_nabla_norm = 0.0;      ///< g-norm of d^nabla T
    bool harmonic = false;          ///< d^nabla T = 0 and delta T = 0 within tol
    double div_trace_residual = 0.0;  ///< || delta T + d(trace_g T) ||, Codazzi fields only
};

/// Harmonicity diagnostics for a symmetric 2-tensor field.  `tol` gates the
/// harmonic verdict; it also decides whether the divergence/trace consistency
/// residual is meaningful (Codazzi fields only).
CodazziDiagnostics harmonicity_diagnostics(const SymTensorField& field, const ChartManifold& chart,
                                           const Point& x, const FdSpec& fd, double tol = 1e-4);

// -- constructors for fields used throughout the suites ----------------------

/// T = lambda * g.
SymTensorField metric_multiple_field(const ChartManifold& chart, double lambda);

/// Hessian of a scalar function on a flat chart, computed by central
/// differences with its own internal step.  Rejected on curved charts (the
/// Codazzi property of Hessians needs vanishing curvature).
SymTensorField hessian_field(const ChartManifold& chart, ScalarField f, const std::string& name,
                             double step = 3e-3);

/// Ricci tensor of the chart as a field.  The evaluator runs the full
/// curvature pipeline at every point with `geom_fd`; the default wide
/// refined stencil keeps both truncation bias and round-off amplification
/// low when the result is differentiated again.
SymTensorField ricci_field(const ChartManifold& chart, FdSpec geom_fd = FdSpec{1e-2, true});

/// T - (trace_g T / n) g.
SymTensorField traceless_part(const SymTensorField& field, const ChartManifold& chart);

/// Scalar field x -> g-trace of T at x (2-tensor fields).
ScalarField trace_scalar(const SymTensorField& field, const ChartManifold& chart);

}  // namespace curvcheck
