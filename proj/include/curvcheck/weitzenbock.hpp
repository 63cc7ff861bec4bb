#pragma once

#include "curvcheck/chart.hpp"

namespace curvcheck {

/// Curvature term of the Bochner formula for symmetric p-tensors:
///   Q_p(T, T) = R_ij T^{i k2..kp} T^j_{k2..kp}
///             - (p-1) R_ijkl T^{ik k3..kp} T^{jl}_{k3..kp}.
/// This raw form accepts any symmetric tensor of rank >= 2 (the value is
/// insensitive to the pure-trace part for p = 2).
double bochner_q_raw(const PointGeometry& geom, const DenseTensor& t);

/// Gated front end: requires the field value at x to be traceless.
double bochner_q(const SymTensorField& field, const ChartManifold& chart, const Point& x,
                 const FdSpec& fd, double traceless_tol = 1e-6);

/// Spectral form for 2-tensors that commute with Ricci at x:
///   sum_{i<j} sec(e_i, e_j) (lambda_i - lambda_j)^2
/// over a g-orthonormal eigenbasis of T.
double bochner_q_spectral(const PointGeometry& geom, const SymMatrix& t);

struct BochnerBreakdown {
    double lhs = 0.0;        ///< (1/2) Laplacian of ||T||^2
    double q_term = 0.0;
    double grad_term = 0.0;  ///< ||grad T||^2
    double residual = 0.0;   ///< lhs - q_term - grad_term
};

struct BochnerOptions {
    double lap_step = 1.5e-2;   ///< stencil for the outer Laplacian
    double codazzi_tol = 1e-4;  ///< gate: field must be Codazzi at x
    double trace_tol = 1e-4;    ///< gate: traceless, or constant trace for p = 2
};

/// Residual of (1/2) Lap ||T||^2 = Q_p(T,T) + ||grad T||^2 for a Codazzi
/// field.  For p = 2 a constant-trace (harmonic) field is accepted in place
/// of a traceless one; higher ranks require tracelessness.
BochnerBreakdown bochner_breakdown(const SymTensorField& field, const ChartManifold& chart,
                                   const Point& x, const FdSpec& fd,
                                   const BochnerOptions& opt = BochnerOptions{});

struct KatoGap {
    double grad_sq = 0.0;   ///< ||grad T||^2
    double dnorm_sq = 0.0;  ///< ||d ||T|| ||^2
    double gap = 0.0;       ///< grad_sq - dnorm_sq, nonnegative in exact arithmetic
};

/// Kato-type gap at a point where the field does not vanish (||T|| >= 1e-6).
KatoGap kato_gap(const SymTensorField& field, const ChartManifold& chart, const Point& x,
                 double step = 1e-3);

/// Cubic-trace gap of a traceless symmetric matrix against the sharp bound
///   tr(T^3) >= -((n-2)/sqrt(n(n-1))) ||T||^3   (Frobenius norm).
/// Zero exactly at diag(1,..,1,-(n-1)) up to scaling.
double okumura_gap(const SymMatrix& traceless);

struct PinchingResult {
    double identity_residual = 0.0;  ///< Q_2(Ric) vs its conformally flat closed form
    double gap = 0.0;                ///< Q_2(Ric) minus the cubic-bound estimate
};

/// Closed-form control of Q_2(Ric, Ric) on conformally flat charts:
///   Q_2 = s ||E||^2/(n-1) + n tr(E^3)/(n-2)  with E the traceless Ricci part,
/// bounded below by ||E||^2 (s - sqrt(n(n-1)) ||E||)/(n-1).
PinchingResult ricci_pinching(const PointGeometry& geom, double lcf_tol = 1e-3);

}  // namespace curvcheck
