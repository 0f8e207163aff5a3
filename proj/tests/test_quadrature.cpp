#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ofb/errors.hpp"
#include "ofb/quadrature.hpp"

namespace q = ofb::quadrature;
using std::numbers::pi;

TEST_CASE("gauss-legendre nodes and weights") {
    for (int n : {2, 5, 12, 20}) {
        const auto& g = q::gauss_legendre(n);
        REQUIRE(g.nodes.size() == static_cast<std::size_t>(n));
        double wsum = 0.0;
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            wsum += g.weights[i];
            CHECK(g.nodes[i] == doctest::Approx(-g.nodes[n - 1 - i]).epsilon(1e-15));
        }
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
        // exact for degree 2n - 1
        double m = 0.0;
        for (std::size_t i = 0; i < g.nodes.size(); ++i)
            m += g.weights[i] * std::pow(g.nodes[i], 2 * n - 2);
        CHECK(m == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
    }
    CHECK(&q::gauss_legendre(12) == &q::gauss_legendre(12));
}

TEST_CASE("rule validation") {
    CHECK_THROWS_AS((q::QuadratureRule{1, 1, 0.25}.validate()), ofb::DomainError);
    CHECK_THROWS_AS((q::QuadratureRule{12, 0, 0.25}.validate()), ofb::DomainError);
    CHECK_THROWS_AS((q::QuadratureRule{12, 1, 0.0}.validate()), ofb::DomainError);
    const auto d = q::QuadratureRule{}.doubled();
    CHECK(d.panels == 2);
    CHECK(d.max_width == 0.125);
}

TEST_CASE("interval integrals") {
    const q::QuadratureRule rule;
    CHECK(q::integrate_value(q::Interval{0, 1}, [](double x) { return std::exp(x); }, rule) ==
          doctest::Approx(std::exp(1.0) - 1).epsilon(1e-15));
    // kink at 0.3 handled by a breakpoint
    const auto f = [](double x) { return std::abs(x - 0.3); };
    const double exact = 0.5 * (0.09 + 0.49);
    CHECK(q::integrate_value(q::Interval{0, 1, {0.3}}, f, rule) == doctest::Approx(exact).epsilon(1e-15));
    const auto e = q::integrate(q::Interval{0, 1, {0.3}}, f, rule);
    CHECK(e.error < 1e-14);
}

TEST_CASE("segment points") {
    const std::vector<double> br{0.5, -3.0, 0.2, 0.5, 1.0};
    const auto s = q::segment_points(0.0, 1.0, br);
    CHECK(s == std::vector<double>{0.0, 0.2, 0.5, 1.0});
}

TEST_CASE("two-dimensional regions") {
    const q::QuadratureRule rule;
    const auto r2 = [](double x, double y) { return x * x + y * y; };
    // rectangle
    CHECK(q::integrate_value(q::Rectangle{0, 2, -1, 1}, r2, rule) == doctest::Approx(16.0 / 3 + 4.0 / 3).epsilon(1e-14));
    // annulus 1..2 of r^2: 2 pi (16 - 1) / 4
    CHECK(q::integrate_value(q::Annulus{0, 0, 1, 2}, r2, rule) == doctest::Approx(7.5 * pi).epsilon(1e-14));
    // disk off-center, constant integrand
    CHECK(q::integrate_value(q::Annulus{3, 1, 0, 0.5}, [](double, double) { return 1.0; }, rule) ==
          doctest::Approx(0.25 * pi).epsilon(1e-14));
    // pierced rectangle: area and second moment
    const double R = 6, h = 2;
    CHECK(q::integrate_value(q::PiercedRectangle{R, h}, [](double, double) { return 1.0; }, rule) ==
          doctest::Approx(4 * R * h - pi).epsilon(1e-14));
    CHECK(q::integrate_value(q::PiercedRectangle{R, h}, r2, rule) ==
          doctest::Approx(4 * R * h * (R * R + h * h) / 3 - pi / 2).epsilon(1e-14));
}

TEST_CASE("norms") {
    const q::QuadratureRule rule;
    const q::Region2D sq = q::Rectangle{0, 1, 0, 1};
    const auto f = [](double x, double y) { return x * y; };
    CHECK(q::norm_Lp(sq, f, 2, rule) == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(q::norm_Lp(sq, f, 4, rule) == doctest::Approx(std::pow(1.0 / 25, 0.25)).epsilon(1e-14));
    CHECK(q::norm_Lp(sq, f, 1, rule) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK_THROWS_AS(q::norm_Lp(sq, f, 3, rule), ofb::DomainError);
    const double g = q::norm_L2_grad(sq, [](double, double y) { return y; }, [](double x, double) { return x; }, rule);
    CHECK(g == doctest::Approx(std::sqrt(2.0 / 3)).epsilon(1e-14));
}

TEST_CASE("non-finite integrands are rejected") {
    CHECK_THROWS_AS(q::integrate_value(q::Interval{0, 1}, [](double) { return NAN; }, {}), ofb::NonFinite);
}
