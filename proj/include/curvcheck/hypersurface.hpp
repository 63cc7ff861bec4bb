#pragma once

#include "curvcheck/chart.hpp"

namespace curvcheck {

/// Parametrized hypersurface of the round unit sphere: the immersion maps an
/// n-dimensional parameter box into the unit sphere of R^{n+2}.  `step` is the
/// stencil for differentiating the immersion; `flip_normal` reverses the
/// orientation picked by the generalized cross product.
struct Hypersurface {
    int dim = 0;
    std::vector<AxisInterval> domain;
    std::function<std::vector<double>(const Point&)> immersion;
    std::string name;
    double step = 1e-3;
    bool flip_normal = false;
};

struct SffData {
    SymMatrix induced;               ///< first fundamental form <dF, dF>
    SymMatrix sff;                   ///< second fundamental form <d2F, normal>
    std::vector<double> normal;      ///< unit normal, tangent to the ambient sphere
    double mean = 0.0;               ///< g-trace of the second fundamental form
    double norm_sq = 0.0;            ///< squared g-norm of the second fundamental form
    std::vector<double> shape_eigs;  ///< principal curvatures, ascending
};

/// First/second fundamental forms at parameter point u.  `refine` switches on
/// Richardson extrapolation for every immersion stencil (used for pointwise
/// values); plain stencils are kept for anything that gets differentiated
/// again, where smooth truncation error is harmless but half-step jitter is
/// not.  Throws DegenerateImmersionError when the differential degenerates and
/// when the image leaves the unit sphere.
SffData second_fundamental_form(const Hypersurface& h, const Point& u, bool refine = true);

/// The parameter box as a chart with the induced metric.  The metric uses a
/// coarse refined Jacobian stencil: curvature evaluations differentiate it
/// twice, which amplifies round-off by 1/step^2 while smooth truncation
/// stays benign.
ChartManifold induced_chart(const Hypersurface& h);

/// The second fundamental form as a symmetric 2-tensor field on the induced
/// chart (plain stencils, smooth in u).
SymTensorField sff_field(const Hypersurface& h);

struct SimonsBreakdown {
    double lhs = 0.0;       ///< (1/2) Laplacian of ||S||^2 on the induced chart
    double grad_sq = 0.0;   ///< ||grad S||^2
    double q_term = 0.0;    ///< ||S||^2 (n - ||S||^2)
    double residual = 0.0;  ///< lhs - grad_sq - q_term
    double mean = 0.0;      ///< g-trace of S at u (gate diagnostics)
    double norm_sq = 0.0;   ///< refined ||S||^2 at u
};

/// Simons identity for minimal hypersurfaces of the unit sphere:
///   (1/2) Lap ||S||^2 = ||grad S||^2 + ||S||^2 (n - ||S||^2).
/// Gated on |g-trace of S| <= minimal_tol (NotMinimalError otherwise).
SimonsBreakdown simons_identity_residual(const Hypersurface& h, const Point& u,
                                         double minimal_tol = 1e-6, double lap_step = 1.5e-2);

}  // namespace curvcheck
