#include "curvcheck/conformal.hpp"

#include <algorithm>
#include <cmath>

#include "curvcheck/curvature_operator.hpp"
#include "curvcheck/errors.hpp"

namespace curvcheck {

SymMatrix schouten(const PointGeometry& geom) {
    const int n = geom.dim;
    if (n < 3) throw DimensionError("Schouten tensor needs dimension >= 3");
    SymMatrix p(n);
    const double c = geom.scalar / (2.0 * n - 2.0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            p.set(i, j, (geom.ricci(i, j) - c * geom.g(i, j)) / (n - 2.0));
    return p;
}

DenseTensor kulkarni_nomizu(const SymMatrix& a, const SymMatrix& b, int dim) {
    DenseTensor t(4, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                for (int l = 0; l < dim; ++l)
                    t.at({i, j, k, l}) = a(i, k) * b(j, l) + a(j, l) * b(i, k) -
                                         a(i, l) * b(j, k) - a(j, k) * b(i, l);
    return t;
}

DenseTensor weyl_tensor(const PointGeometry& geom) {
    const SymMatrix p = schouten(geom);
    return geom.riemann_low - kulkarni_nomizu(p, geom.g, geom.dim);
}

double weyl_norm(const PointGeometry& geom) {
    const DenseTensor w = weyl_tensor(geom);
    return std::sqrt(std::max(0.0, tensor_norm_sq(w, geom.g)));
}

double lcf_residual(const PointGeometry& geom) { return weyl_tensor(geom).max_abs(); }

ConformalData conformal_data(const PointGeometry& geom) {
    ConformalData out;
    out.weyl = weyl_tensor(geom);
    out.weyl_norm = std::sqrt(std::max(0.0, tensor_norm_sq(out.weyl, geom.g)));
    out.schouten = schouten(geom);
    const EigenSystem res = generalized_eigen(geom.ricci, geom.g);
    out.ricci_eigs = res.values;
    const EigenSystem ses = generalized_eigen(out.schouten, geom.g);
    out.schouten_eigs = ses.values;
    return out;
}

namespace {

void require_vanishing_weyl(const PointGeometry& geom, double lcf_tol) {
    const double scale = std::max(1.0, std::fabs(geom.scalar));
    if (weyl_norm(geom) > lcf_tol * scale)
        throw NotConformallyFlatError("Weyl part does not vanish at the evaluation point");
}

}  // namespace

double sec_from_ricci_residual(const PointGeometry& geom, double lcf_tol) {
    const int n = geom.dim;
    if (n < 3) throw DimensionError("sectional reconstruction needs dimension >= 3");
    require_vanishing_weyl(geom, lcf_tol);

    const EigenSystem es = generalized_eigen(geom.ricci, geom.g);
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double predicted = (es.values[static_cast<std::size_t>(i)] +
                                      es.values[static_cast<std::size_t>(j)] -
                                      geom.scalar / (n - 1.0)) /
                                     (n - 2.0);
            const double actual =
                sectional_curvature(geom, es.vectors[static_cast<std::size_t>(i)],
                                    es.vectors[static_cast<std::size_t>(j)]);
            worst = std::max(worst, std::fabs(actual - predicted));
        }
    return worst;
}

double schouten_operator_identity_residual(const PointGeometry& geom, const SymMatrix& theta,
                                           double lcf_tol) {
    const int n = geom.dim;
    if (n < 3) throw DimensionError("Schouten operator identity needs dimension >= 3");
    if (theta.dim() != n) throw ShapeError("theta dimension mismatch");
    require_vanishing_weyl(geom, lcf_tol);

    double tr = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tr += geom.g_inv(i, j) * theta(i, j);
    if (std::fabs(tr) > 1e-10 * std::max(1.0, theta.max_abs()))
        throw NonTracelessError("theta must be traceless");

    const double quad = operator_quadratic_form(geom, theta);

    // Closed form 2 Sch_ij theta^{ik} theta^j_k, scaled by the operator constant.
    const SymMatrix p = schouten(geom);
    const DenseTensor theta_up = raise_all(theta.to_tensor(), geom.g);
    const DenseTensor theta_mixed = adjust_index(theta.to_tensor(), 0, geom.g, IndexDir::Raise);
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                s += p(i, j) * theta_up.at({i, k}) * theta_mixed.at({j, k});
    return std::fabs(quad - kSecondKindScale * 2.0 * s);
}

}  // namespace curvcheck
