#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "curvcheck/chart.hpp"
#include "curvcheck/conformal.hpp"
#include "curvcheck/errors.hpp"
#include "curvcheck/rng.hpp"
#include "curvcheck/tensor.hpp"

using namespace curvcheck;

namespace {

ChartManifold polar_sphere(int n) {
    ChartManifold c;
    c.dim = n;
    c.domain.assign(static_cast<std::size_t>(n), AxisInterval{0.35, 2.79});
    c.domain.back() = {0.2, 6.0};
    c.metric_eval = [n](const Point& x) {
        SymMatrix g(n);
        double w = 1.0;
        g.set(0, 0, 1.0);
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

ChartManifold lumpy3() {
    // Generic inhomogeneous 3-metric with no special structure.
    ChartManifold c;
    c.dim = 3;
    c.domain.assign(3, AxisInterval{-1.0, 1.0});
    c.metric_eval = [](const Point& x) {
        SymMatrix g(3);
        g.set(0, 0, 1.0 + 0.2 * std::sin(x[1]));
        g.set(1, 1, 1.0 + 0.15 * x[2] * x[2]);
        g.set(2, 2, 1.0 + 0.2 * std::cos(x[0]));
        g.set(0, 1, 0.05 * x[2]);
        return g;
    };
    c.name = "lumpy-3";
    return c;
}

ChartManifold conformal4() {
    ChartManifold c;
    c.dim = 4;
    c.domain.assign(4, AxisInterval{-1.0, 1.0});
    c.metric_eval = [](const Point& x) {
        const double u = 0.1 * std::sin(x[0]) * std::cos(x[1]);
        const double w = std::exp(2.0 * u);
        SymMatrix g(4);
        for (int i = 0; i < 4; ++i) g.set(i, i, w);
        return g;
    };
    c.name = "conformal-4";
    return c;
}

ChartManifold sphere_cross_plane4() {
    ChartManifold c;
    c.dim = 4;
    c.domain = {{0.35, 2.79}, {0.2, 6.0}, {-1.0, 1.0}, {-1.0, 1.0}};
    c.metric_eval = [](const Point& x) {
        SymMatrix g(4);
        g.set(0, 0, 1.0);
        g.set(1, 1, std::sin(x[0]) * std::sin(x[0]));
        g.set(2, 2, 1.0);
        g.set(3, 3, 1.0);
        return g;
    };
    c.name = "sphere-cross-plane";
    return c;
}

SymMatrix random_sym(int n, SplitMix64& rng) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, rng.uniform(-1.0, 1.0));
    return m;
}

const FdSpec kFd{1e-3, true};

}  // namespace

TEST_CASE("schouten tensor of space forms is half the metric times the curvature") {
    const PointGeometry s4 = point_geometry(polar_sphere(4), {1.2, 1.4, 1.1, 2.0}, kFd);
    CHECK((schouten(s4) - s4.g * 0.5).max_abs() <= 1e-8);

    const PointGeometry s3 = point_geometry(polar_sphere(3), {1.1, 1.3, 2.0}, kFd);
    CHECK((schouten(s3) - s3.g * 0.5).max_abs() <= 1e-8);

    const PointGeometry h3 = point_geometry(half_space(3), {0.1, -0.2, 1.3}, kFd);
    CHECK((schouten(h3) - h3.g * -0.5).max_abs() <= 1e-8);

    const PointGeometry s2 = point_geometry(polar_sphere(2), {1.0, 2.0}, kFd);
    CHECK_THROWS_AS(schouten(s2), DimensionError);
}

TEST_CASE("kulkarni-nomizu product has the pair symmetries") {
    SplitMix64 rng(substream_seed(11, "kn-symmetries"));
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng.next() % 2);
        const SymMatrix a = random_sym(n, rng);
        const SymMatrix b = random_sym(n, rng);
        const DenseTensor ab = kulkarni_nomizu(a, b, n);
        const DenseTensor ba = kulkarni_nomizu(b, a, n);
        for_each_index(4, n, [&](const std::vector<int>& id) {
            const int i = id[0], j = id[1], k = id[2], l = id[3];
            const double v = ab.at(id);
            CHECK(std::fabs(v + ab.at({j, i, k, l})) <= 1e-13);
            CHECK(std::fabs(v + ab.at({i, j, l, k})) <= 1e-13);
            CHECK(std::fabs(v - ab.at({k, l, i, j})) <= 1e-13);
            CHECK(std::fabs(v - ba.at(id)) <= 1e-13);
        });
    }
}

TEST_CASE("half-metric product with the metric reproduces space-form curvature") {
    const PointGeometry s3 = point_geometry(polar_sphere(3), {1.2, 1.0, 2.4}, kFd);
    const DenseTensor kn = kulkarni_nomizu(s3.g * 0.5, s3.g, 3);
    CHECK((kn - s3.riemann_low).max_abs() <= 1e-8);

    const PointGeometry h3 = point_geometry(half_space(3), {0.2, 0.1, 1.5}, kFd);
    const DenseTensor knh = kulkarni_nomizu(h3.g * -0.5, h3.g, 3);
    CHECK((knh - h3.riemann_low).max_abs() <= 1e-8);
}

TEST_CASE("weyl curvature vanishes where it must") {
    // Space form in dimension four.
    const PointGeometry s4 = point_geometry(polar_sphere(4), {1.3, 1.2, 1.0, 2.2}, kFd);
    CHECK(weyl_norm(s4) <= 1e-7);
    CHECK(lcf_residual(s4) <= 1e-7);

    // Conformal factors do not create Weyl curvature.
    const PointGeometry c4 = point_geometry(conformal4(), {0.2, -0.3, 0.1, 0.4}, kFd);
    CHECK(weyl_norm(c4) <= 1e-7);

    // Every 3-chart, however inhomogeneous, has identically zero Weyl part.
    const PointGeometry l3 = point_geometry(lumpy3(), {0.2, 0.1, -0.3}, kFd);
    CHECK(weyl_norm(l3) <= 1e-6);
    CHECK(lcf_residual(l3) <= 1e-6);
}

TEST_CASE("product of a sphere and a plane has the known weyl obstruction") {
    const Point x = {1.15, 2.0, 0.1, -0.2};
    const PointGeometry geom = point_geometry(sphere_cross_plane4(), x, kFd);
    CHECK(lcf_residual(geom) > 1e-2);
    CHECK(weyl_norm(geom) > 0.1);

    const DenseTensor w = weyl_tensor(geom);
    // Plane block: R_2323 = 0 while the Schouten product contributes -1/3.
    CHECK(w.at({2, 3, 2, 3}) == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    // Sphere block: R_0101 = sin^2 and the product contributes (2/3) sin^2.
    const double s2 = std::sin(x[0]) * std::sin(x[0]);
    CHECK(w.at({0, 1, 0, 1}) == doctest::Approx(s2 / 3.0).epsilon(1e-6));
}

TEST_CASE("conformal data couples the ricci and schouten spectra") {
    const PointGeometry geom = point_geometry(lumpy3(), {0.15, -0.2, 0.25}, kFd);
    const ConformalData data = conformal_data(geom);
    REQUIRE(data.schouten_eigs.size() == 3);
    REQUIRE(data.ricci_eigs.size() == 3);
    for (int k = 0; k < 3; ++k) {
        if (k > 0) {
            CHECK(data.schouten_eigs[static_cast<std::size_t>(k - 1)] <=
                  data.schouten_eigs[static_cast<std::size_t>(k)]);
            CHECK(data.ricci_eigs[static_cast<std::size_t>(k - 1)] <=
                  data.ricci_eigs[static_cast<std::size_t>(k)]);
        }
        const double expected = (data.ricci_eigs[static_cast<std::size_t>(k)] -
                                 geom.scalar / (2.0 * 3.0 - 2.0)) /
                                (3.0 - 2.0);
        CHECK(data.schouten_eigs[static_cast<std::size_t>(k)] ==
              doctest::Approx(expected).epsilon(1e-9));
    }
    CHECK(data.weyl_norm <= 1e-6);
}

TEST_CASE("sectional curvatures reconstruct from ricci eigenvalues on conformally flat charts") {
    CHECK(sec_from_ricci_residual(point_geometry(polar_sphere(4), {1.2, 1.3, 1.1, 2.1}, kFd)) <=
          1e-8);
    CHECK(sec_from_ricci_residual(point_geometry(half_space(3), {0.3, -0.1, 1.4}, kFd)) <= 1e-8);
    CHECK(sec_from_ricci_residual(point_geometry(lumpy3(), {0.1, 0.2, -0.25}, kFd)) <= 1e-6);
    CHECK(sec_from_ricci_residual(point_geometry(conformal4(), {0.3, 0.1, -0.2, 0.15}, kFd)) <=
          1e-7);

    CHECK_THROWS_AS(
        sec_from_ricci_residual(point_geometry(sphere_cross_plane4(), {1.2, 2.1, 0.1, 0.2}, kFd)),
        NotConformallyFlatError);
}

TEST_CASE("dropping the dimension normalizer breaks the reconstruction for n = 4") {
    // On the unit 4-sphere each sectional curvature is 1, the Ricci
    // eigenvalues are 3 and the scalar curvature is 12.  The normalized
    // combination (r_i + r_j - s/(n-1))/(n-2) gives 1; without the 1/(n-2)
    // factor the value is 2, off by a full unit.
    const PointGeometry s4 = point_geometry(polar_sphere(4), {1.2, 1.3, 1.1, 2.1}, kFd);
    const ConformalData data = conformal_data(s4);
    const double r0 = data.ricci_eigs[0];
    const double r1 = data.ricci_eigs[1];
    const double unnormalized = r0 + r1 - s4.scalar / 3.0;
    const double normalized = unnormalized / 2.0;
    CHECK(std::fabs(normalized - 1.0) <= 1e-6);
    CHECK(std::fabs(unnormalized - 1.0) > 1e-2);
}

TEST_CASE("schouten operator identity holds for traceless tensors on conformally flat charts") {
    SplitMix64 rng(substream_seed(11, "schouten-operator"));
    const PointGeometry s3 = point_geometry(polar_sphere(3), {1.2, 1.1, 2.3}, kFd);
    const PointGeometry c4 = point_geometry(conformal4(), {0.1, 0.2, -0.1, 0.3}, kFd);
    for (const PointGeometry* geom : {&s3, &c4}) {
        for (int trial = 0; trial < 10; ++trial) {
            SymMatrix theta = random_sym(geom->dim, rng);
            // Remove the g-trace.
            const double tau = trace_first_two(theta.to_tensor(), geom->g)[0];
            theta = theta - geom->g * (tau / geom->dim);
            CHECK(schouten_operator_identity_residual(*geom, theta) <= 1e-7);
        }
    }

    CHECK_THROWS_AS(schouten_operator_identity_residual(s3, s3.g), NonTracelessError);
    const PointGeometry bad =
        point_geometry(sphere_cross_plane4(), {1.1, 2.2, -0.1, 0.1}, kFd);
    SymMatrix theta(4);
    theta.set(0, 1, 0.5);
    CHECK_THROWS_AS(schouten_operator_identity_residual(bad, theta), NotConformallyFlatError);
}
