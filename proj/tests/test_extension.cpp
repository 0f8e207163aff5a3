#include <doctest.h>

#include <cmath>

#include "ofb/errors.hpp"
#include "ofb/extension.hpp"

namespace ex = ofb::extension;
using ofb::ChannelGeometry;

TEST_CASE("cutoff profile") {
    const ex::CutoffProfile p(0.5);
    CHECK(p.value(0.0) == 1.0);
    CHECK(p.value(1.0) == 1.0);
    CHECK(p.value(-1.0) == 1.0);
    CHECK(p.value(1.5) == 0.0);
    CHECK(p.value(2.0) == 0.0);
    CHECK(p.value(1.25) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p.value(-1.25) == p.value(1.25));
    // C^1 at the joints
    CHECK(std::abs(p.prime(1.0)) < 1e-14);
    CHECK(std::abs(p.prime(1.5)) < 1e-14);
    double maxp = 0, maxpp = 0;
    for (double t = 1.0; t <= 1.5; t += 1e-4) {
        maxp = std::max(maxp, std::abs(p.prime(t)));
        maxpp = std::max(maxpp, std::abs(p.second(t)));
    }
    CHECK(maxp == doctest::Approx(p.prime_sup()).epsilon(1e-6));
    CHECK(maxpp == doctest::Approx(p.second_sup()).epsilon(1e-3));
    CHECK_THROWS_AS(ex::CutoffProfile(0.0), ofb::DomainError);
    CHECK(ex::phi(0.5, 1.25) == p.value(1.25));
}

TEST_CASE("Psi boundary values") {
    const ChannelGeometry g(6, 2);
    const double U = 1.7;
    for (double x : {-6.0, -3.0, -2.0, 2.0, 4.5, 6.0})
        for (double y : {-2.0, -0.5, 0.0, 1.3, 2.0}) {
            const auto p = ex::psi(g, U, x, y);
            CHECK(p[0] == doctest::Approx(U).epsilon(1e-14));
            CHECK(std::abs(p[1]) < 1e-14);
        }
    for (double x : {-1.5, 0.0, 0.7})
        for (double y : {-2.0, 2.0}) {
            const auto p = ex::psi(g, U, x, y);
            CHECK(p[0] == doctest::Approx(U).epsilon(1e-14));
            CHECK(std::abs(p[1]) < 1e-14);
        }
    // zero on the core square, in particular on the obstacle
    for (double t = 0; t < 6.3; t += 0.5) {
        const auto p = ex::psi(g, U, std::cos(t), std::sin(t));
        CHECK(p[0] == 0.0);
        CHECK(p[1] == 0.0);
    }
}

TEST_CASE("Psi is divergence free and its jacobian matches finite differences") {
    const ChannelGeometry g(10, 3);
    const auto pts = ex::interior_samples(g, 200, 7);
    CHECK(ex::max_divergence(g, 1.0, pts) < 1e-12);
    const double d = 1e-6;
    for (std::size_t i = 0; i < 20; ++i) {
        const auto [x, y] = pts[i];
        const auto J = ex::psi_jacobian(g, 1.0, x, y);
        const auto px = ex::psi(g, 1.0, x + d, y), mx = ex::psi(g, 1.0, x - d, y);
        const auto py = ex::psi(g, 1.0, x, y + d), my = ex::psi(g, 1.0, x, y - d);
        CHECK(std::abs(J.p1x - (px[0] - mx[0]) / (2 * d)) < 1e-6);
        CHECK(std::abs(J.p2x - (px[1] - mx[1]) / (2 * d)) < 1e-6);
        CHECK(std::abs(J.p1y - (py[0] - my[0]) / (2 * d)) < 1e-6);
        CHECK(std::abs(J.p2y - (py[1] - my[1]) / (2 * d)) < 1e-6);
    }
}

TEST_CASE("zero net boundary flux") {
    CHECK(std::abs(ex::boundary_flux(ChannelGeometry(6, 2), 1.0)) < 1e-12);
    CHECK(std::abs(ex::boundary_flux(ChannelGeometry(20, 5), 3.0)) < 1e-11);
}

TEST_CASE("B1 closed form") {
    CHECK(ex::B1(2) == doctest::Approx(240.99047619047619).epsilon(1e-14));
    CHECK(ex::B1(3) == doctest::Approx(80.419047619047619).epsilon(1e-14));
    CHECK(ex::B1(5) == doctest::Approx(38.979047619047619).epsilon(1e-14));
    CHECK_THROWS_AS(ex::B1(1.0), ofb::DomainError);
}

TEST_CASE("closed forms against quadrature") {
    for (auto [R, h] : {std::pair{6.0, 2.0}, {10.0, 3.0}, {20.0, 5.0}}) {
        const ChannelGeometry g(R, h);
        const auto q = ex::quadrature_norms(g);
        CHECK(q.grad_sq.value == doctest::Approx(ex::B1(h)).epsilon(1e-10));
        CHECK(q.l4_4.value == doctest::Approx(ex::b2_exact(R, h)).epsilon(1e-10));
        // the closed-form B2 is an overestimate of the L4 norm
        CHECK(ex::B2(R, h) > q.l4_4.value);
    }
}

TEST_CASE("B2 structure") {
    CHECK(ex::B2(6, 2) == doctest::Approx(247.77768998).epsilon(1e-9));
    CHECK(ex::b2_exact(6, 2) == doctest::Approx(224.03950817).epsilon(1e-9));
    // both are 4Rh plus an R-independent remainder
    for (double h : {2.0, 3.5})
        for (double R : {10.0, 40.0}) {
            CHECK(ex::B2(R, h) - 4 * R * h == doctest::Approx(ex::B2(2 * R, h) - 8 * R * h).epsilon(1e-10));
            CHECK(ex::b2_exact(R, h) - 4 * R * h == doctest::Approx(ex::b2_exact(2 * R, h) - 8 * R * h).epsilon(1e-10));
        }
}

TEST_CASE("extension field norms scale with U") {
    const auto f = ex::make_extension(ChannelGeometry(6, 2), 2.0);
    CHECK(f.grad_norm() == doctest::Approx(2.0 * std::sqrt(ex::B1(2))).epsilon(1e-15));
    CHECK(f.l4_norm() == doctest::Approx(2.0 * std::pow(ex::B2(6, 2), 0.25)).epsilon(1e-15));
    CHECK_THROWS_AS(ex::make_extension(ChannelGeometry(6, 2), 0.0), ofb::DomainError);
}

TEST_CASE("samples") {
    const ChannelGeometry g(6, 2);
    const auto pts = ex::interior_samples(g, 100);
    CHECK(pts.size() == 100);
    for (const auto& p : pts)
        CHECK(g.contains(p[0], p[1]));
    CHECK(pts == ex::interior_samples(g, 100));
    const auto grid = ex::sample_grid(g, 1.0, 5, 3);
    CHECK(grid.size() == 15);
    CHECK(grid.front().x == -6.0);
    CHECK(grid.back().y == 2.0);
}
