#include "ofb/strip.hpp"

#include <cmath>

#include "ofb/errors.hpp"
#include "ofb/specfun.hpp"

namespace ofb::strip {

using quadrature::Interval;
using quadrature::QuadratureRule;

QuadratureRule profile_rule() { return {20, 1, 0.125}; }

namespace {

double alpha() { return specfun::spectral_constants().alpha; }

double cn_power_integral(double h, int p, const QuadratureRule& rule) {
    const double k = alpha() / h;
    return quadrature::integrate_value(
        Interval{-h, h, {0.0}}, [&](double y) { return std::pow(specfun::jacobi_cn(k * y), p); }, rule);
}

void require_positive_height(double h) {
    if (!(h > 0.0) || !std::isfinite(h))
        throw DomainError("strip: height must be positive");
}

}  // namespace

double normalization_mu(double h, const QuadratureRule& rule) {
    require_positive_height(h);
    return std::pow(cn_power_integral(h, 4, rule), 0.25);
}

double w_profile(double h, double y) {
    return specfun::jacobi_cn(alpha() * y / h) / normalization_mu(h);
}

double w_profile_prime(double h, double y) {
    const double k = alpha() / h;
    return k * specfun::jacobi_cn_prime(k * y) / normalization_mu(h);
}

double w_l2(double h, const QuadratureRule& rule) {
    const double mu = normalization_mu(h, rule);
    return std::sqrt(cn_power_integral(h, 2, rule)) / mu;
}

double w_prime_l2(double h, const QuadratureRule& rule) {
    require_positive_height(h);
    const double mu = normalization_mu(h, rule);
    const double k = alpha() / h;
    const double s = quadrature::integrate_value(
        Interval{-h, h, {0.0}},
        [&](double y) {
            const double d = k * specfun::jacobi_cn_prime(k * y);
            return d * d;
        },
        rule);
    return std::sqrt(s) / mu;
}

double w_l4(double h, const QuadratureRule& rule) {
    const double mu = normalization_mu(h, rule);
    return std::pow(cn_power_integral(h, 4, rule), 0.25) / mu;
}

double find_h0() {
    const auto g = [](double h) { return w_prime_l2(h) - 1.0; };
    double lo = 1.1;
    double hi = 10.0;
    double glo = g(lo);
    if (glo * g(hi) >= 0.0)
        throw BracketError("find_h0: ||W_h'|| - 1 has no sign change on (1.1, 10)");
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (gm == 0.0)
            return mid;
        if ((gm < 0.0) == (glo < 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double sech_profile(double x, double a) { return 1.0 / std::cosh(x / a); }

double sech_profile_prime(double x, double a) {
    const double z = x / a;
    return -std::tanh(z) / std::cosh(z) / a;
}

double sech_profile_second(double x, double a) {
    // (sech z)'' = sech z - 2 sech^3 z
    const double s = 1.0 / std::cosh(x / a);
    return (s - 2.0 * s * s * s) / (a * a);
}

double euler_lagrange_residual(double x, double a, double lambda) {
    const double v = sech_profile(x, a);
    return -a * a * sech_profile_second(x, a) + v - lambda * v * v * v;
}

SechIntegrals sech_integrals(double a, const QuadratureRule& rule) {
    // sech tails beyond 40a are below e^-40 relative
    const Interval line{-40.0 * a, 40.0 * a, {0.0}};
    QuadratureRule r = rule;
    r.max_width = rule.max_width * a;
    SechIntegrals out{};
    out.l2_sq = quadrature::integrate_value(line, [&](double x) { return std::pow(sech_profile(x, a), 2); }, r);
    out.prime_l2_sq =
        quadrature::integrate_value(line, [&](double x) { return std::pow(sech_profile_prime(x, a), 2); }, r);
    out.l4_4 = quadrature::integrate_value(line, [&](double x) { return std::pow(sech_profile(x, a), 4); }, r);
    return out;
}

double separated_quotient_at(double h) {
    require_positive_height(h);
    const double wl2 = w_l2(h);
    const double wp = w_prime_l2(h);
    const double wl4 = w_l4(h);
    const double a = wl2 / wp;
    const auto v = sech_integrals(a);
    return (v.prime_l2_sq * wl2 * wl2 + v.l2_sq * wp * wp) / (std::sqrt(v.l4_4) * wl4 * wl4);
}

const StripMinimizerResult& separated_quotient() {
    static const StripMinimizerResult result = [] {
        StripMinimizerResult r{};
        r.alpha = alpha();
        r.h0 = find_h0();
        r.mu_h0 = normalization_mu(r.h0);
        r.w_l2 = w_l2(r.h0);
        r.lambda = 2.0;
        const double wp = w_prime_l2(r.h0);
        const double wl4 = w_l4(r.h0);
        const auto v = sech_integrals(r.w_l2);
        r.quotient = (v.prime_l2_sq * r.w_l2 * r.w_l2 + v.l2_sq * wp * wp) / (std::sqrt(v.l4_4) * wl4 * wl4);
        r.c_upper = r.quotient * r.h0;
        r.el_residual_max = 0.0;
        for (int i = -400; i <= 400; ++i) {
            const double x = 0.025 * i * r.w_l2;
            r.el_residual_max = std::max(r.el_residual_max, std::abs(euler_lagrange_residual(x, r.w_l2, r.lambda)));
        }
        return r;
    }();
    return result;
}

}  // namespace ofb::strip
