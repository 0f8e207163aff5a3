#include <doctest.h>

#include <cmath>

#include "ofb/errors.hpp"
#include "ofb/specfun.hpp"

namespace sf = ofb::specfun;

TEST_CASE("bessel functions against mpmath") {
    CHECK(sf::bessel_j0(1.0) == doctest::Approx(0.76519768655796655).epsilon(1e-14));
    CHECK(sf::bessel_j1(1.0) == doctest::Approx(0.44005058574493352).epsilon(1e-14));
    CHECK(sf::bessel_j0(10.0) == doctest::Approx(-0.24593576445134834).epsilon(1e-11));
    CHECK(sf::bessel_j0(0.0) == 1.0);
    CHECK(sf::bessel_j1(0.0) == 0.0);
    CHECK(sf::bessel_j0(-2.5) == sf::bessel_j0(2.5));
    CHECK(sf::bessel_j1(-2.5) == -sf::bessel_j1(2.5));
    CHECK_THROWS_AS(sf::bessel_j0(13.0), ofb::DomainError);
}

TEST_CASE("first zero of J0") {
    const double z = sf::bessel_j0_first_zero();
    CHECK(z == doctest::Approx(2.404825557695773).epsilon(1e-14));
    CHECK(std::abs(sf::bessel_j0(z)) < 1e-15);
}

TEST_CASE("jacobi elliptic functions against mpmath") {
    auto t = sf::jacobi_sncndn(1.0, 0.5);
    CHECK(t.sn == doctest::Approx(0.80300182489564389).epsilon(1e-14));
    CHECK(t.cn == doctest::Approx(0.59597656767214067).epsilon(1e-14));
    CHECK(t.dn == doctest::Approx(0.82316100163159627).epsilon(1e-14));
    t = sf::jacobi_sncndn(0.7, 0.9);
    CHECK(t.sn == doctest::Approx(0.60836788218237934).epsilon(1e-14));
    CHECK(t.cn == doctest::Approx(0.79365516436858559).epsilon(1e-14));
    CHECK(t.dn == doctest::Approx(0.81663925201770331).epsilon(1e-14));
    // m = 0 reduces to circular functions
    t = sf::jacobi_sncndn(0.9, 0.0);
    CHECK(t.sn == doctest::Approx(std::sin(0.9)).epsilon(1e-15));
    CHECK(t.cn == doctest::Approx(std::cos(0.9)).epsilon(1e-15));
    CHECK(t.dn == 1.0);
    CHECK_THROWS_AS(sf::jacobi_sncndn(0.5, 1.0), ofb::DomainError);
    CHECK_THROWS_AS(sf::jacobi_sncndn(0.5, -0.1), ofb::DomainError);
}

TEST_CASE("jacobi identities") {
    for (double u = -4.0; u <= 4.0; u += 0.37) {
        const auto t = sf::jacobi_sncndn(u, 0.5);
        CHECK(t.sn * t.sn + t.cn * t.cn == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(0.5 * t.sn * t.sn + t.dn * t.dn == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("cn solves cn'' + cn^3 = 0") {
    // central second difference of cn' against -cn^3
    const double d = 1e-5;
    for (double t = 0.1; t < 3.5; t += 0.3) {
        const double cpp = (sf::jacobi_cn_prime(t + d) - sf::jacobi_cn_prime(t - d)) / (2 * d);
        CHECK(std::abs(cpp + std::pow(sf::jacobi_cn(t), 3)) < 1e-8);
    }
    CHECK(sf::jacobi_cn(0.0) == 1.0);
    CHECK(sf::jacobi_cn_prime(0.0) == 0.0);
}

TEST_CASE("alpha: first zero of cn") {
    const double a = sf::cn_first_zero();
    CHECK(a == doctest::Approx(1.8540746773013719).epsilon(1e-14));
    CHECK(a == doctest::Approx(sf::complete_elliptic_k(0.5)).epsilon(1e-14));
    CHECK(std::abs(sf::jacobi_cn(a)) < 1e-14);
    CHECK(sf::jacobi_cn(2 * a) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sf::complete_elliptic_k(0.9) == doctest::Approx(2.5780921133481733).epsilon(1e-14));
    CHECK(sf::complete_elliptic_k(0.0) == doctest::Approx(M_PI / 2).epsilon(1e-15));
}

TEST_CASE("cached spectral constants") {
    const auto& c = sf::spectral_constants();
    CHECK(&c == &sf::spectral_constants());
    CHECK(c.mu0 == sf::bessel_j0_first_zero());
    CHECK(c.alpha == sf::cn_first_zero());
}
