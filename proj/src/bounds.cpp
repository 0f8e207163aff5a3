#include "ofb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ofb/errors.hpp"
#include "ofb/specfun.hpp"
#include "ofb/strip.hpp"

namespace ofb::bounds {

using std::numbers::pi;

namespace {

constexpr double kClosedFormFrom = 1.25;

void require_height(double h) {
    if (!(h > 1.0) || !std::isfinite(h))
        throw DomainError("bounds: need h > 1");
}

// Neumaier compensated sum
struct CompensatedSum {
    long double sum = 0.0L;
    long double comp = 0.0L;
    void add(long double v) {
        const long double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    [[nodiscard]] long double value() const { return sum + comp; }
};

double kappa_integral(double h) {
    const quadrature::QuadratureRule rule{20, 2, 0.25};
    return quadrature::integrate_value(
        quadrature::Interval{1.0, h},
        [h](double r) {
            const double t = (h - r) * std::log(r);
            return t * t * t * t * r;
        },
        rule);
}

}  // namespace

double strip_lower_constant() { return pi / 2.0 * std::sqrt(3.0 * pi / 2.0); }

double kappa_closed_form(double h) {
    require_height(h);
    const long double H = h;
    const long double L = std::log(H);
    const long double H2 = H * H;
    const long double H6 = H2 * H2 * H2;
    CompensatedSum s;
    s.add(-1.0L / 324.0L);
    s.add(96.0L * H / 3125.0L);
    s.add(-9.0L * H2 / 64.0L);
    s.add(32.0L * H2 * H / 81.0L);
    s.add(-3.0L * H2 * H2 / 4.0L);
    s.add(7580461.0L * H6 / 16200000.0L);
    s.add(-66801.0L * H6 * L / 90000.0L);
    s.add(46690.0L * H6 * L * L / 90000.0L);
    s.add(-17400.0L * H6 * L * L * L / 90000.0L);
    s.add(3000.0L * H6 * L * L * L * L / 90000.0L);
    return static_cast<double>(s.value());
}

double kappa(double h) {
    require_height(h);
    return h >= kClosedFormFrom ? kappa_closed_form(h) : kappa_integral(h);
}

double x0_numerator(double h) {
    require_height(h);
    const long double H2 = static_cast<long double>(h) * h;
    const long double L = std::log(static_cast<long double>(h));
    CompensatedSum s;
    s.add(2.0L * H2 * L * L);
    s.add(-2.0L * H2 * L);
    s.add(H2);
    s.add(-1.0L);
    return static_cast<double>(s.value());
}

std::pair<double, double> lower_bound_arms(const ChannelGeometry& geom) {
    const double R = geom.R();
    const double h = geom.h();
    const double poincare = std::sqrt(pi) / 2.0 * std::hypot(R, h) / (R * h);
    const double faber_krahn = specfun::spectral_constants().mu0 / std::sqrt(4.0 * R * h - pi);
    return {poincare, faber_krahn};
}

double lower_bound(const ChannelGeometry& geom) {
    const auto [a, b] = lower_bound_arms(geom);
    return pi * std::sqrt(1.5) * std::max(a, b);
}

double upper_bound_X0(double h) {
    return 0.5 * std::sqrt(pi / (2.0 * kappa(h))) * x0_numerator(h);
}

std::optional<double> upper_bound_X1(const ChannelGeometry& geom) {
    if (geom.R() < 2.0 * geom.h() + 1.0)
        return 2.0 * std::sqrt(5.0 * pi) / geom.h();
    return std::nullopt;
}

std::pair<double, double> strip_bounds(double h, double sep_upper) {
    require_height(h);
    return {strip_lower_constant() / h, std::min(upper_bound_X0(h), sep_upper)};
}

double rectangle_sobolev_lower(double R, double h) {
    return strip_lower_constant() * std::hypot(R, h) / (R * h);
}

BoundsReport bounds_report(const ChannelGeometry& geom) {
    const double h = geom.h();
    BoundsReport r{};
    std::tie(r.lower_poincare, r.lower_faberkrahn) = lower_bound_arms(geom);
    r.lower = pi * std::sqrt(1.5) * std::max(r.lower_poincare, r.lower_faberkrahn);
    r.kappa = kappa(h);
    r.upper_X0 = upper_bound_X0(h);
    r.upper_X1 = upper_bound_X1(geom);
    r.strip_upper_sep = strip::separated_quotient().c_upper / h;
    r.strip_lower = strip_lower_constant() / h;
    r.strip_upper_X0 = r.upper_X0;
    return r;
}

double x0(double h, double x, double y) {
    const double r2 = x * x + y * y;
    const double r = std::sqrt(r2);
    if (r <= 1.0 || r >= h)
        return 0.0;
    return 0.5 * (h - r) * std::log(r2);
}

namespace {
// d/dr of (h - r) log r
double x0_radial_derivative(double h, double r) { return -std::log(r) + (h - r) / r; }
}  // namespace

double x0_dx(double h, double x, double y) {
    const double r = std::hypot(x, y);
    if (r <= 1.0 || r >= h)
        return 0.0;
    return x0_radial_derivative(h, r) * x / r;
}

double x0_dy(double h, double x, double y) {
    const double r = std::hypot(x, y);
    if (r <= 1.0 || r >= h)
        return 0.0;
    return x0_radial_derivative(h, r) * y / r;
}

double x1(const ChannelGeometry& geom, double x, double y) {
    const double h = geom.h();
    const double dx = x - 0.5 * (geom.R() + 1.0);
    return std::max(0.0, h * h - dx * dx - y * y);
}

double x0_quadrature_quotient(double h, const quadrature::QuadratureRule& rule) {
    require_height(h);
    const quadrature::Annulus annulus{0.0, 0.0, 1.0, h};
    const double grad = quadrature::norm_L2_grad(
        annulus, [h](double x, double y) { return x0_dx(h, x, y); },
        [h](double x, double y) { return x0_dy(h, x, y); }, rule);
    const double l4 = quadrature::norm_Lp(annulus, [h](double x, double y) { return x0(h, x, y); }, 4, rule);
    return grad * grad / (l4 * l4);
}

double x1_quadrature_quotient(const ChannelGeometry& geom, const quadrature::QuadratureRule& rule) {
    const double cx = 0.5 * (geom.R() + 1.0);
    const quadrature::Annulus disk{cx, 0.0, 0.0, geom.h()};
    const double grad = quadrature::norm_L2_grad(
        disk, [cx](double x, double) { return -2.0 * (x - cx); }, [](double, double y) { return -2.0 * y; }, rule);
    const double l4 = quadrature::norm_Lp(disk, [&](double x, double y) { return x1(geom, x, y); }, 4, rule);
    return grad * grad / (l4 * l4);
}

double x0_ratio_asymptotic(double log_h) {
    // kappa/h^6 and numerator/h^2 with the h^-k terms of kappa kept through exp(-k L)
    const long double L = log_h;
    const long double e = std::exp(-L);
    CompensatedSum k;
    k.add(-1.0L / 324.0L * std::pow(e, 6));
    k.add(96.0L / 3125.0L * std::pow(e, 5));
    k.add(-9.0L / 64.0L * std::pow(e, 4));
    k.add(32.0L / 81.0L * std::pow(e, 3));
    k.add(-3.0L / 4.0L * e * e);
    k.add(7580461.0L / 16200000.0L);
    k.add(-66801.0L * L / 90000.0L);
    k.add(46690.0L * L * L / 90000.0L);
    k.add(-17400.0L * L * L * L / 90000.0L);
    k.add(3000.0L * L * L * L * L / 90000.0L);
    const long double num = 2.0L * L * L - 2.0L * L + 1.0L - e * e;
    const long double upper_times_h = 0.5L * std::sqrt(std::numbers::pi_v<long double> / (2.0L * k.value())) * num;
    return static_cast<double>(upper_times_h / strip_lower_constant());
}

}  // namespace ofb::bounds
