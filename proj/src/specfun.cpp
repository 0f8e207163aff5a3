#include "ofb/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "ofb/errors.hpp"
#include "ofb/quadrature.hpp"

namespace ofb::specfun {

namespace {

constexpr double kSeriesLimit = 12.0;

// sum_k (-1)^k (x/2)^(2k+nu) / (k! (k+nu)!) for nu in {0, 1}
double bessel_series(double x, int nu) {
    if (!(std::abs(x) <= kSeriesLimit))
        throw DomainError("bessel: series evaluation limited to |x| <= 12");
    const long double q = -static_cast<long double>(x) * x / 4.0L;
    long double term = nu == 0 ? 1.0L : static_cast<long double>(x) / 2.0L;
    long double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<long double>(k) * (k + nu));
        sum += term;
        if (std::abs(term) < 1e-22L * std::abs(sum) && std::abs(term) < 1e-22L)
            break;
    }
    return static_cast<double>(sum);
}

}  // namespace

double bessel_j0(double x) { return bessel_series(x, 0); }
double bessel_j1(double x) { return bessel_series(x, 1); }

double bessel_j0_first_zero() {
    double lo = 2.0;
    double hi = 3.0;
    if (bessel_j0(lo) * bessel_j0(hi) >= 0.0)
        throw BracketError("bessel_j0_first_zero: no sign change on (2, 3)");
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        if (bessel_j0(lo) * bessel_j0(mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 8; ++i) {
        const double dx = bessel_j0(x) / bessel_j1(x);  // J0' = -J1
        x += dx;
        if (std::abs(dx) < 1e-16)
            break;
    }
    return x;
}

JacobiTriple jacobi_sncndn(double u, double m) {
    if (!(m >= 0.0 && m < 1.0))
        throw DomainError("jacobi_sncndn: parameter m must lie in [0, 1)");
    if (m == 0.0)
        return {std::sin(u), std::cos(u), 1.0};

    constexpr int kMaxLevels = 16;
    std::array<double, kMaxLevels + 1> a{};
    std::array<double, kMaxLevels + 1> c{};
    a[0] = 1.0;
    double b = std::sqrt(1.0 - m);
    c[0] = std::sqrt(m);
    int n = 0;
    while (std::abs(c[n]) > 1e-16 && n < kMaxLevels) {
        const double an = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        a[n + 1] = an;
        ++n;
    }
    double phi = std::ldexp(1.0, n) * a[n] * u;
    double phi_prev = phi;
    for (int k = n; k > 0; --k) {
        phi_prev = phi;
        phi = 0.5 * (phi + std::asin(c[k] / a[k] * std::sin(phi)));
    }
    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    // dn = cos(phi_0) / cos(phi_1 - phi_0)
    const double dn = n > 0 ? cn / std::cos(phi_prev - phi) : 1.0;
    return {sn, cn, dn};
}

double jacobi_cn(double t) { return jacobi_sncndn(t, 0.5).cn; }

double jacobi_cn_prime(double t) {
    const auto j = jacobi_sncndn(t, 0.5);
    return -j.sn * j.dn;
}

double cn_first_zero() {
    const quadrature::QuadratureRule rule{16, 4, 0.25};
    const auto integrand = [](double t) {
        const double s = std::sin(t);
        return 1.0 / std::sqrt(2.0 - s * s);
    };
    return std::numbers::sqrt2 *
           quadrature::integrate_value(quadrature::Interval{0.0, std::numbers::pi / 2}, integrand, rule);
}

double complete_elliptic_k(double m) {
    if (!(m >= 0.0 && m < 1.0))
        throw DomainError("complete_elliptic_k: parameter m must lie in [0, 1)");
    double a = 1.0;
    double b = std::sqrt(1.0 - m);
    // the AGM converges quadratically; a and b may end one ulp apart, so stop at a few ulps
    for (int it = 0; it < 64 && std::abs(a - b) > 4.0 * std::numeric_limits<double>::epsilon() * a; ++it) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return std::numbers::pi / (2.0 * a);
}

const SpectralConstants& spectral_constants() {
    static const SpectralConstants constants{bessel_j0_first_zero(), cn_first_zero()};
    return constants;
}

}  // namespace ofb::specfun
