#include <doctest.h>

#include <cmath>
#include <vector>

#include "ofb/bounds.hpp"
#include "ofb/errors.hpp"
#include "ofb/extension.hpp"
#include "ofb/threshold.hpp"

namespace th = ofb::threshold;
using ofb::ChannelGeometry;
using ofb::FlowParams;

TEST_CASE("critical Reynolds number") {
    CHECK(th::re_bar(ChannelGeometry(6, 2)) == doctest::Approx(0.049418296661417659).epsilon(1e-13));
    CHECK(th::re_bar(ChannelGeometry(6, 5)) == doctest::Approx(0.053548886779650635).epsilon(1e-13));
}

TEST_CASE("certificate agrees with U/eta < re_bar") {
    const ChannelGeometry g(6, 2);
    const double rb = th::re_bar(g);
    CHECK(th::certify_uniqueness(g, FlowParams(0.001, 1)).unique_certified);
    CHECK_FALSE(th::certify_uniqueness(g, FlowParams(1, 1)).unique_certified);
    CHECK(th::certify_uniqueness(g, FlowParams(0.99 * rb, 1)).unique_certified);
    CHECK_FALSE(th::certify_uniqueness(g, FlowParams(1.01 * rb, 1)).unique_certified);
    // only U/eta matters
    CHECK(th::certify_uniqueness(g, FlowParams(0.99 * rb * 7, 7)).unique_certified);
    const auto r = th::certify_uniqueness(g, FlowParams(0.01, 1));
    CHECK(r.lhs_umbral == doctest::Approx(2 * r.grad_psi + std::sqrt(r.S_R_lower) * r.l4_psi).epsilon(1e-15));
    CHECK(r.rhs_umbral == doctest::Approx(r.S_R_lower).epsilon(1e-15));
    CHECK(r.grad_u_bound == doctest::Approx(3 * r.grad_psi).epsilon(1e-15));
    CHECK_FALSE(r.surrogate_note.empty());
}

TEST_CASE("umbral predicate") {
    CHECK(th::umbral_condition(0.1, 0.1, 1.0, 1.0));
    CHECK_FALSE(th::umbral_condition(1.0, 0.1, 1.0, 1.0));
}

TEST_CASE("re_bar decreases, approaching R^(-1/4) only for very large R") {
    const double h = 5;
    const auto lb = [&](double e) { return std::log(th::re_bar(ChannelGeometry(std::pow(10.0, e), h))); };
    for (double e = 2; e < 20; e += 0.5)
        CHECK(lb(e + 0.5) < lb(e));
    // mpmath local slopes d log re_bar / d log R
    const auto local = [&](double e) { return (lb(e + 0.01) - lb(e - 0.01)) / (0.02 * std::log(10.0)); };
    CHECK(local(6) == doctest::Approx(-0.203896047749754).epsilon(1e-5));
    CHECK(local(12) == doctest::Approx(-0.248225202680905).epsilon(1e-5));
    CHECK(std::abs(local(20) + 0.25) < 1e-4);
    // secant slope over [1e2, 1e6]; the B1 term still dominates there
    const double secant = (lb(6) - lb(2)) / (4 * std::log(10.0));
    CHECK(secant == doctest::Approx(-0.142972286125962).epsilon(1e-10));
}

TEST_CASE("eps(h) root") {
    const std::vector<std::pair<double, double>> ref{
        {1.5, 0.39097627553832002}, {2.0, 0.41988621825195700}, {5.0, 0.52438791934577974}, {20.0, 0.67923772755997586}};
    for (auto [h, e] : ref) {
        const double r = th::eps_growth(h);
        CHECK(r == doctest::Approx(e).epsilon(1e-13));
        CHECK(std::abs(th::eps_equation(h, r)) <= 1e-12);
        CHECK(th::eps_equation(h, 0.0) < 0.0);
        CHECK(th::eps_equation(h, 2 * r) > 0.0);
    }
    CHECK_THROWS_AS(th::eps_growth(1.0), ofb::DomainError);
}

TEST_CASE("growth diagnostic") {
    const auto t = th::growth_diagnostic(2.0, {1e2, 1e3, 1e4});
    REQUIRE(t.rows.size() == 3);
    CHECK(t.limit == doctest::Approx(std::pow(8.0, 0.25)).epsilon(1e-15));
    CHECK(t.above_limit);
    CHECK(t.above_eps);
    CHECK(t.decreasing);
    CHECK(std::abs(t.rows.back().l4_ratio / t.limit - 1.0) < 0.01);
    // quadrature norms match the closed forms with the exact L4 value
    CHECK(t.rows[0].grad_norm == doctest::Approx(std::sqrt(ofb::extension::B1(2))).epsilon(1e-9));
    CHECK(t.rows[0].l4_norm == doctest::Approx(std::pow(ofb::extension::b2_exact(100, 2), 0.25)).epsilon(1e-9));
}
