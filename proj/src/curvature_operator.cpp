#include "curvcheck/curvature_operator.hpp"

#include <cmath>
#include <string>

namespace curvcheck {

namespace {

double g_dot(const SymMatrix& g, const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            s += g(i, j) * a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return s;
}

/// Gram-Schmidt against g; throws DegeneratePlaneError when the input span
/// collapses.
std::vector<std::vector<double>> orthonormalize(const SymMatrix& g,
                                                std::vector<std::vector<double>> vs) {
    std::vector<std::vector<double>> out;
    for (auto& v : vs) {
        double original = std::sqrt(std::fabs(g_dot(g, v, v)));
        for (const auto& e : out) {
            double c = g_dot(g, v, e);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * e[i];
        }
        double nrm = std::sqrt(std::fabs(g_dot(g, v, v)));
        if (nrm <= 1e-10 * std::max(1.0, original)) {
            throw DegeneratePlaneError("vectors are linearly dependent");
        }
        for (double& c : v) c /= nrm;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<double> lower(const SymMatrix& g, const std::vector<double>& v) {
    std::vector<double> w(v.size(), 0.0);
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            w[static_cast<std::size_t>(i)] += g(i, j) * v[static_cast<std::size_t>(j)];
    return w;
}

}  // namespace

TracelessBasis traceless_basis(const PointGeometry& geom) {
    const int n = geom.dim;
    TracelessBasis basis;
    basis.x = geom.x;

    std::vector<std::vector<double>> coords;
    for (int i = 0; i < n; ++i) {
        std::vector<double> e(static_cast<std::size_t>(n), 0.0);
        e[static_cast<std::size_t>(i)] = 1.0;
        coords.push_back(std::move(e));
    }
    basis.frame = orthonormalize(geom.g, std::move(coords));

    std::vector<std::vector<double>> flat;
    flat.reserve(basis.frame.size());
    for (const auto& e : basis.frame) flat.push_back(lower(geom.g, e));

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            SymMatrix m(n);
            for (int i = 0; i < n; ++i) {
                for (int j = i; j < n; ++j) {
                    m.set(i, j, inv_sqrt2 * (flat[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] *
                                                 flat[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)] +
                                             flat[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)] *
                                                 flat[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)]));
                }
            }
            basis.elements.push_back(std::move(m));
        }
    }
    // Trace-free diagonal combinations D_k = (E_1 + .. + E_k - k E_{k+1}) / sqrt(k(k+1)).
    for (int k = 1; k < n; ++k) {
        SymMatrix m(n);
        double norm = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                double s = 0.0;
                for (int a = 0; a <= k; ++a) {
                    double w = (a == k) ? -static_cast<double>(k) : 1.0;
                    s += w * flat[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] *
                         flat[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)];
                }
                m.set(i, j, norm * s);
            }
        }
        basis.elements.push_back(std::move(m));
    }
    return basis;
}

double operator_quadratic_form(const PointGeometry& geom, const SymMatrix& theta) {
    const int n = geom.dim;
    DenseTensor up = raise_all(theta.to_tensor(), geom.g);
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    s += geom.riemann_low.at({i, j, k, l}) * up.at({j, k}) * up.at({i, l});
    return kSecondKindScale * s;
}

namespace {

double operator_bilinear(const PointGeometry& geom, const DenseTensor& a_up,
                         const DenseTensor& b_up) {
    const int n = geom.dim;
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    s += geom.riemann_low.at({i, j, k, l}) * b_up.at({j, k}) * a_up.at({i, l});
    return kSecondKindScale * s;
}

}  // namespace

OperatorSpectrum curvature_operator_spectrum(const PointGeometry& geom,
                                             const TracelessBasis& basis) {
    if (basis.x != geom.x) {
        throw PointMismatchError("basis and geometry were computed at different points");
    }
    const int nb = static_cast<int>(basis.elements.size());
    std::vector<DenseTensor> up;
    up.reserve(basis.elements.size());
    for (const auto& e : basis.elements) up.push_back(raise_all(e.to_tensor(), geom.g));

    std::vector<double> raw(static_cast<std::size_t>(nb) * nb, 0.0);
    for (int a = 0; a < nb; ++a) {
        for (int b = 0; b < nb; ++b) {
            raw[static_cast<std::size_t>(a) * nb + b] =
                operator_bilinear(geom, up[static_cast<std::size_t>(a)], up[static_cast<std::size_t>(b)]);
        }
    }

    OperatorSpectrum os;
    for (int a = 0; a < nb; ++a) {
        for (int b = a + 1; b < nb; ++b) {
            os.self_adjoint_residual = std::max(
                os.self_adjoint_residual, std::fabs(raw[static_cast<std::size_t>(a) * nb + b] -
                                                    raw[static_cast<std::size_t>(b) * nb + a]));
        }
    }
    os.matrix = SymMatrix(nb);
    for (int a = 0; a < nb; ++a) {
        for (int b = a; b < nb; ++b) {
            os.matrix.set(a, b, 0.5 * (raw[static_cast<std::size_t>(a) * nb + b] +
                                       raw[static_cast<std::size_t>(b) * nb + a]));
        }
    }
    os.eigenvalues = symmetric_eigen(os.matrix).values;

    const double zero_tol = 1e-8;
    const double lo = os.eigenvalues.front();
    const double hi = os.eigenvalues.back();
    if (lo > zero_tol) {
        os.classification = SpectrumClass::PositiveDefinite;
    } else if (lo >= -zero_tol) {
        os.classification = SpectrumClass::PositiveSemidefinite;
    } else if (hi < -zero_tol) {
        os.classification = SpectrumClass::NegativeDefinite;
    } else if (hi <= zero_tol) {
        os.classification = SpectrumClass::NegativeSemidefinite;
    } else {
        os.classification = SpectrumClass::Indefinite;
    }
    return os;
}

const char* to_string(SpectrumClass c) {
    switch (c) {
        case SpectrumClass::PositiveDefinite: return "positive-definite";
        case SpectrumClass::PositiveSemidefinite: return "positive-semidefinite";
        case SpectrumClass::NegativeDefinite: return "negative-definite";
        case SpectrumClass::NegativeSemidefinite: return "negative-semidefinite";
        case SpectrumClass::Indefinite: return "indefinite";
    }
    return "indefinite";
}

double sectional_curvature(const PointGeometry& geom, const std::vector<double>& x,
                           const std::vector<double>& y) {
    const int n = geom.dim;
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
        throw ShapeError("plane vectors have wrong dimension");
    }
    auto on = orthonormalize(geom.g, {x, y});
    const auto& u = on[0];
    const auto& v = on[1];
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    s += geom.riemann_low.at({i, j, k, l}) * u[static_cast<std::size_t>(i)] *
                         v[static_cast<std::size_t>(j)] * u[static_cast<std::size_t>(k)] *
                         v[static_cast<std::size_t>(l)];
    return s;
}

BridgingResiduals bridging_residuals(const PointGeometry& geom, SplitMix64& rng, int pairs) {
    const int n = geom.dim;
    BridgingResiduals br;

    for (int p = 0; p < pairs; ++p) {
        std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
        for (;;) {
            for (double& c : x) c = rng.uniform(-1.0, 1.0);
            for (double& c : y) c = rng.uniform(-1.0, 1.0);
            try {
                auto on = orthonormalize(geom.g, {x, y});
                x = on[0];
                y = on[1];
                break;
            } catch (const DegeneratePlaneError&) {
                continue;  // redraw
            }
        }
        SymMatrix theta(n);
        auto xl = lower(geom.g, x);
        auto yl = lower(geom.g, y);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                theta.set(i, j, 0.5 * (xl[static_cast<std::size_t>(i)] * yl[static_cast<std::size_t>(j)] +
                                       yl[static_cast<std::size_t>(i)] * xl[static_cast<std::size_t>(j)]));
        double quad = operator_quadratic_form(geom, theta);
        double sec = sectional_curvature(geom, x, y);
        br.op_sec = std::max(br.op_sec, std::fabs(quad - 2.0 * sec));
    }

    TracelessBasis basis = traceless_basis(geom);
    for (std::size_t b = 0; b < basis.frame.size(); ++b) {
        const auto& eb = basis.frame[b];
        double ric = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                ric += geom.ricci(i, j) * eb[static_cast<std::size_t>(i)] * eb[static_cast<std::size_t>(j)];
        double sum = 0.0;
        for (std::size_t a = 0; a < basis.frame.size(); ++a) {
            if (a == b) continue;
            sum += sectional_curvature(geom, eb, basis.frame[a]);
        }
        br.ricci_sum = std::max(br.ricci_sum, std::fabs(ric - sum));
    }
    return br;
}

}  // namespace curvcheck
