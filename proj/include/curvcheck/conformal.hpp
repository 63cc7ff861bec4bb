#pragma once

#include "curvcheck/chart.hpp"

namespace curvcheck {

/// Schouten tensor (n-2)^{-1} (Ric - s/(2n-2) g); needs dimension >= 3.
SymMatrix schouten(const PointGeometry& geom);

/// Kulkarni-Nomizu product (A @ B)_ijkl = A_ik B_jl + A_jl B_ik - A_il B_jk - A_jk B_il,
/// laid out so that (g/2 @ g) is the curvature array of the round unit sphere.
DenseTensor kulkarni_nomizu(const SymMatrix& a, const SymMatrix& b, int dim);

/// Weyl part of the curvature array, R - Sch @ g; identically zero in
/// dimension 3 and exactly the conformal obstruction for n >= 4.
DenseTensor weyl_tensor(const PointGeometry& geom);

/// Invariant norm sqrt(W_ijkl W^ijkl).
double weyl_norm(const PointGeometry& geom);

/// Max-abs residual of the reconstruction R = Sch @ g (zero iff the Weyl
/// part vanishes at this point).
double lcf_residual(const PointGeometry& geom);

struct ConformalData {
    DenseTensor weyl;
    double weyl_norm = 0.0;
    SymMatrix schouten;
    std::vector<double> schouten_eigs;  ///< ascending, shared eigenbasis with Ricci
    std::vector<double> ricci_eigs;     ///< ascending
};

ConformalData conformal_data(const PointGeometry& geom);

/// For charts with vanishing Weyl part: checks sec(e_i, e_j) = lambda_i + lambda_j
/// over a g-orthonormal Ricci eigenbasis, where lambda are Schouten eigenvalues
/// (equivalently (r_i + r_j - s/(n-1))/(n-2) in Ricci eigenvalues).  Returns the
/// max residual over pairs; throws NotConformallyFlatError when gated out.
double sec_from_ricci_residual(const PointGeometry& geom, double lcf_tol = 1e-3);

/// For charts with vanishing Weyl part and traceless theta: residual of
///   g(R theta, theta) = 2 kappa Sch_ij theta^{ik} theta^j_k
/// with R the curvature operator on traceless symmetric 2-tensors and kappa
/// its normalization constant.
double schouten_operator_identity_residual(const PointGeometry& geom, const SymMatrix& theta,
                                           double lcf_tol = 1e-3);

}  // namespace curvcheck
