#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "curvcheck/chart.hpp"
#include "curvcheck/curvature_operator.hpp"
#include "curvcheck/errors.hpp"
#include "curvcheck/rng.hpp"
#include "curvcheck/tensor.hpp"

using namespace curvcheck;

namespace {

ChartManifold polar_sphere(int n, double radius = 1.0) {
    ChartManifold c;
    c.dim = n;
    c.domain.assign(static_cast<std::size_t>(n), AxisInterval{0.35, 2.79});
    c.domain.back() = {0.2, 6.0};
    c.metric_eval = [n, radius](const Point& x) {
        SymMatrix g(n);
        double w = radius * radius;
        g.set(0, 0, w);
        for (int i = 1; i < n; ++i) {
            const double s = std::sin(x[static_cast<std::size_t>(i - 1)]);
            w *= s * s;
            g.set(i, i, w);
        }
        return g;
    };
    c.name = "polar-sphere";
    return c;
}

ChartManifold half_space(int n) {
    ChartManifold c;
    c.dim = n;
    c.domain.assign(static_cast<std::size_t>(n), AxisInterval{-1.0, 1.0});
    c.domain.back() = {0.5, 2.5};
    c.metric_eval = [n](const Point& x) {
        const double y = x[static_cast<std::size_t>(n - 1)];
        SymMatrix g(n);
        for (int i = 0; i < n; ++i) g.set(i, i, 1.0 / (y * y));
        return g;
    };
    c.name = "half-space";
    return c;
}

ChartManifold euclid(int n) {
    ChartManifold c;
    c.dim = n;
    c.domain.assign(static_cast<std::size_t>(n), AxisInterval{-1.0, 1.0});
    c.metric_eval = [n](const Point&) { return SymMatrix::identity(n); };
    c.name = "euclid";
    c.flat = true;
    return c;
}

// Product of a round 2-sphere and a hyperbolic plane: mixed-sign sectional
// curvature, so the curvature action is indefinite.
ChartManifold sphere_cross_hyperbolic() {
    ChartManifold c;
    c.dim = 4;
    c.domain = {{0.35, 2.79}, {0.2, 6.0}, {-1.0, 1.0}, {0.5, 2.5}};
    c.metric_eval = [](const Point& x) {
        SymMatrix g(4);
        g.set(0, 0, 1.0);
        g.set(1, 1, std::sin(x[0]) * std::sin(x[0]));
        const double w = 1.0 / (x[3] * x[3]);
        g.set(2, 2, w);
        g.set(3, 3, w);
        return g;
    };
    c.name = "sphere-cross-hyperbolic";
    return c;
}

const FdSpec kFd{1e-3, true};

}  // namespace

TEST_CASE("traceless basis is g-orthonormal and trace-free") {
    const ChartManifold c = polar_sphere(3);
    const PointGeometry geom = point_geometry(c, {1.1, 1.3, 2.0}, kFd);
    const TracelessBasis basis = traceless_basis(geom);
    const int expected = 3 * 4 / 2 - 1;
    REQUIRE(static_cast<int>(basis.elements.size()) == expected);

    for (std::size_t a = 0; a < basis.elements.size(); ++a) {
        const DenseTensor ta = basis.elements[a].to_tensor();
        CHECK(std::fabs(trace_first_two(ta, geom.g)[0]) <= 1e-10);
        for (std::size_t b = a; b < basis.elements.size(); ++b) {
            const double dot = inner_product(ta, basis.elements[b].to_tensor(), geom.g);
            CHECK(std::fabs(dot - (a == b ? 1.0 : 0.0)) <= 1e-10);
        }
    }
}

TEST_CASE("curvature action on the unit sphere is four times the identity") {
    // Calibration: eigenvectors are orthonormal-pair tensors theta with
    // |theta|^2 = 1/2 and g(Op(theta), theta) = 2 sec = 2, hence eigenvalue 4.
    for (int n : {2, 3, 4}) {
        const ChartManifold c = polar_sphere(n);
        Point x(static_cast<std::size_t>(n), 1.2);
        x.back() = 2.0;
        const PointGeometry geom = point_geometry(c, x, kFd);
        const OperatorSpectrum spec = curvature_operator_spectrum(geom, traceless_basis(geom));
        CHECK(spec.classification == SpectrumClass::PositiveDefinite);
        CHECK(spec.self_adjoint_residual <= 1e-8);
        for (double ev : spec.eigenvalues) CHECK(ev == doctest::Approx(4.0).epsilon(1e-7));
    }
}

TEST_CASE("curvature action scales inversely with the squared radius") {
    const ChartManifold c = polar_sphere(2, 2.0);
    const PointGeometry geom = point_geometry(c, {1.0, 2.5}, kFd);
    const OperatorSpectrum spec = curvature_operator_spectrum(geom, traceless_basis(geom));
    REQUIRE(spec.eigenvalues.size() == 2);
    for (double ev : spec.eigenvalues) CHECK(ev == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("spectrum classification covers all sign patterns") {
    const PointGeometry sph =
        point_geometry(polar_sphere(3), {1.1, 1.0, 2.0}, kFd);
    CHECK(curvature_operator_spectrum(sph, traceless_basis(sph)).classification ==
          SpectrumClass::PositiveDefinite);

    const PointGeometry hyp = point_geometry(half_space(3), {0.1, -0.2, 1.2}, kFd);
    CHECK(curvature_operator_spectrum(hyp, traceless_basis(hyp)).classification ==
          SpectrumClass::NegativeDefinite);

    const PointGeometry flat = point_geometry(euclid(3), {0.1, 0.2, 0.3}, kFd);
    const OperatorSpectrum fs = curvature_operator_spectrum(flat, traceless_basis(flat));
    CHECK(fs.classification == SpectrumClass::PositiveSemidefinite);
    for (double ev : fs.eigenvalues) CHECK(std::fabs(ev) <= 1e-9);

    const PointGeometry mixed =
        point_geometry(sphere_cross_hyperbolic(), {1.1, 2.0, 0.1, 1.2}, kFd);
    const OperatorSpectrum ms = curvature_operator_spectrum(mixed, traceless_basis(mixed));
    CHECK(ms.classification == SpectrumClass::Indefinite);
    CHECK(ms.eigenvalues.front() < -1e-3);
    CHECK(ms.eigenvalues.back() > 1e-3);

    CHECK(std::string(to_string(SpectrumClass::PositiveDefinite)) == "positive-definite");
    CHECK(std::string(to_string(SpectrumClass::Indefinite)) == "indefinite");
}

TEST_CASE("quadratic form ties to sectional curvature for pair tensors") {
    const ChartManifold c = polar_sphere(3);
    const PointGeometry geom = point_geometry(c, {1.25, 1.45, 3.0}, kFd);

    // Coordinate directions normalized to orthonormal X, Y.
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            std::vector<double> ex(3, 0.0), ey(3, 0.0);
            ex[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(geom.g(i, i));
            ey[static_cast<std::size_t>(j)] = 1.0 / std::sqrt(geom.g(j, j));
            SymMatrix theta(3);
            for (int a = 0; a < 3; ++a)
                for (int b = a; b < 3; ++b) {
                    // Covariant components of (X (x) Y + Y (x) X)/2.
                    double xa = geom.g(a, a) * ex[static_cast<std::size_t>(a)];
                    double xb = geom.g(b, b) * ex[static_cast<std::size_t>(b)];
                    double ya = geom.g(a, a) * ey[static_cast<std::size_t>(a)];
                    double yb = geom.g(b, b) * ey[static_cast<std::size_t>(b)];
                    theta.set(a, b, 0.5 * (xa * yb + ya * xb));
                }
            const double q = operator_quadratic_form(geom, theta);
            const double sec = sectional_curvature(geom, ex, ey);
            CHECK(sec == doctest::Approx(1.0).epsilon(1e-7));
            CHECK(q == doctest::Approx(2.0 * sec).epsilon(1e-7));
        }
}

TEST_CASE("sectional curvature depends only on the plane") {
    const ChartManifold c = half_space(3);
    const PointGeometry geom = point_geometry(c, {0.3, 0.1, 1.4}, kFd);
    const std::vector<double> x = {1.0, 0.2, -0.3};
    const std::vector<double> y = {0.1, -1.0, 0.5};
    const double s1 = sectional_curvature(geom, x, y);
    CHECK(s1 == doctest::Approx(-1.0).epsilon(1e-7));

    // Same span, different spanning vectors.
    std::vector<double> u(3), v(3);
    for (int i = 0; i < 3; ++i) {
        u[static_cast<std::size_t>(i)] = 2.0 * x[static_cast<std::size_t>(i)] -
                                         0.7 * y[static_cast<std::size_t>(i)];
        v[static_cast<std::size_t>(i)] = 0.5 * x[static_cast<std::size_t>(i)] +
                                         1.3 * y[static_cast<std::size_t>(i)];
    }
    CHECK(sectional_curvature(geom, u, v) == doctest::Approx(s1).epsilon(1e-9));

    // Linearly dependent input spans no plane.
    CHECK_THROWS_AS(sectional_curvature(geom, x, x), DegeneratePlaneError);
}

TEST_CASE("bridging residuals are tiny on analytic charts") {
    SplitMix64 rng(substream_seed(5, "bridging"));
    for (const ChartManifold& c : {polar_sphere(3), half_space(3), euclid(3)}) {
        Point x = {0.9, 0.4, 1.5};
        if (c.flat) x = {0.1, 0.2, 0.3};
        if (c.name == "polar-sphere") x = {1.1, 1.3, 2.0};
        const PointGeometry geom = point_geometry(c, x, kFd);
        const BridgingResiduals br = bridging_residuals(geom, rng, 20);
        CHECK(br.op_sec <= 1e-7);
        CHECK(br.ricci_sum <= 1e-7);
    }
}

TEST_CASE("basis and geometry must agree on the evaluation point") {
    const ChartManifold c = polar_sphere(3);
    const PointGeometry a = point_geometry(c, {1.1, 1.3, 2.0}, kFd);
    const PointGeometry b = point_geometry(c, {1.2, 1.3, 2.0}, kFd);
    const TracelessBasis basis = traceless_basis(a);
    CHECK_THROWS_AS(curvature_operator_spectrum(b, basis), PointMismatchError);
}
