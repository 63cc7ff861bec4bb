#pragma once

#include "curvcheck/chart.hpp"
#include "curvcheck/rng.hpp"

namespace curvcheck {

/// Scaling of the curvature action on traceless symmetric 2-tensors,
/// calibrated so that g(Op(theta), theta) = 2 sec(X, Y) for
/// theta = (X (x) Y + Y (x) X)/2 with X, Y orthonormal.  With the index
/// convention pinned in chart.hpp the raw contraction R_{ijkl} theta^{jk}
/// theta^{il} equals sec/2, hence the factor 4.
inline constexpr double kSecondKindScale = 4.0;

/// g-orthonormal basis of trace-free symmetric 2-tensors at a point,
/// dimension n(n+1)/2 - 1.
struct TracelessBasis {
    Point x;
    std::vector<std::vector<double>> frame;  ///< frame[a] = contravariant E_a
    std::vector<SymMatrix> elements;         ///< covariant components, g-orthonormal
};

TracelessBasis traceless_basis(const PointGeometry& geom);

enum class SpectrumClass {
    PositiveDefinite,
    PositiveSemidefinite,
    NegativeDefinite,
    NegativeSemidefinite,
    Indefinite,
};

const char* to_string(SpectrumClass c);

struct OperatorSpectrum {
    SymMatrix matrix;                   ///< symmetrized operator matrix in the basis
    std::vector<double> eigenvalues;    ///< ascending
    SpectrumClass classification = SpectrumClass::Indefinite;
    double self_adjoint_residual = 0.0; ///< max asymmetry of the raw matrix
};

/// Matrix of the curvature action on the trace-free symmetric 2-tensors at
/// the basis point, with spectrum and sign classification (zero threshold
/// 1e-8).  The basis must come from the same point as `geom`.
OperatorSpectrum curvature_operator_spectrum(const PointGeometry& geom,
                                             const TracelessBasis& basis);

/// Quadratic form of the curvature action on one traceless symmetric tensor:
/// kSecondKindScale * R_{ijkl} theta^{jk} theta^{il}.
double operator_quadratic_form(const PointGeometry& geom, const SymMatrix& theta);

/// Sectional curvature of span{X, Y}; inputs are orthonormalized internally,
/// so the value only depends on the plane.
double sectional_curvature(const PointGeometry& geom, const std::vector<double>& x,
                           const std::vector<double>& y);

struct BridgingResiduals {
    double op_sec = 0.0;     ///< max |g(Op(theta), theta) - 2 sec| over sampled pairs
    double ricci_sum = 0.0;  ///< max |Ric(E_b, E_b) - sum_a sec(E_b, E_a)| over the frame
};

/// Cross-checks tying the operator, sectional curvatures and Ricci together.
BridgingResiduals bridging_residuals(const PointGeometry& geom, SplitMix64& rng, int pairs);

}  // namespace curvcheck
