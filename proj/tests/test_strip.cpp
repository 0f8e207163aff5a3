#include <doctest.h>

#include <cmath>

#include "ofb/bounds.hpp"
#include "ofb/errors.hpp"
#include "ofb/strip.hpp"

namespace st = ofb::strip;

TEST_CASE("W_h is L4-normalized and vanishes on the walls") {
    for (double h : {1.5, 2.0, 4.0}) {
        CHECK(st::w_l4(h) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(std::abs(st::w_profile(h, h)) < 1e-13);
        CHECK(std::abs(st::w_profile(h, -h)) < 1e-13);
        CHECK(st::w_profile(h, 0.3) == st::w_profile(h, -0.3));
    }
    CHECK(st::normalization_mu(1.98978373662103) == doctest::Approx(1.073195034148887).epsilon(1e-12));
}

TEST_CASE("W_h scaling: ||W'_h||_2 ~ h^(-3/4), ||W_h||_2 ~ h^(1/4)") {
    const double r = std::pow(2.0, 0.25);
    CHECK(st::w_prime_l2(4.0) / st::w_prime_l2(2.0) == doctest::Approx(1.0 / (r * r * r)).epsilon(1e-12));
    CHECK(st::w_l2(4.0) / st::w_l2(2.0) == doctest::Approx(r).epsilon(1e-12));
}

TEST_CASE("h0 and the separated quotient") {
    const auto& s = st::separated_quotient();
    CHECK(s.h0 == doctest::Approx(1.98978373662103).epsilon(1e-11));
    CHECK(st::w_prime_l2(s.h0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.w_l2 == doctest::Approx(1.25652750011041).epsilon(1e-11));
    CHECK(s.quotient == doctest::Approx(2.58872169237809).epsilon(1e-11));
    CHECK(s.c_upper == doctest::Approx(5.15099632213200).epsilon(1e-11));
    CHECK(s.c_upper / ofb::bounds::strip_lower_constant() == doctest::Approx(1.51060457925075).epsilon(1e-11));
    CHECK(s.lambda == 2.0);
    CHECK(s.el_residual_max <= 1e-12);
    // the separated quotient scales like 1/h
    CHECK(st::separated_quotient_at(3.0) * 3.0 == doctest::Approx(s.c_upper).epsilon(1e-10));
}

TEST_CASE("sech profile") {
    const double a = 1.25652750011041;
    const auto I = st::sech_integrals(a);
    CHECK(I.l2_sq == doctest::Approx(2 * a).epsilon(1e-13));
    CHECK(I.prime_l2_sq == doctest::Approx(2 / (3 * a)).epsilon(1e-13));
    CHECK(I.l4_4 == doctest::Approx(4 * a / 3).epsilon(1e-13));
    for (double x = -6; x <= 6; x += 0.25)
        CHECK(std::abs(st::euler_lagrange_residual(x, a, 2.0)) < 1e-14);
    CHECK(std::abs(st::euler_lagrange_residual(0.5, a, 1.0)) > 0.1);
    CHECK(st::sech_profile(0.0, a) == 1.0);
    CHECK(st::sech_profile_prime(0.0, a) == 0.0);
}

TEST_CASE("find_h0 brackets") {
    CHECK(st::find_h0() == doctest::Approx(1.98978373662103).epsilon(1e-11));
}
