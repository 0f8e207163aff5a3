#include "ofb/extension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ofb/errors.hpp"

namespace ofb::extension {

CutoffProfile::CutoffProfile(double eps) : eps_(eps) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw DomainError("cutoff: need eps > 0");
}

double CutoffProfile::value(double t) const noexcept {
    const double a = std::abs(t);
    if (a <= 1.0)
        return 1.0;
    if (a >= 1.0 + eps_)
        return 0.0;
    const double e = eps_;
    return (2.0 * a * a * a - 3.0 * (e + 2.0) * a * a + 6.0 * (1.0 + e) * a + e * e * e - 3.0 * e - 2.0) /
           (e * e * e);
}

double CutoffProfile::prime(double t) const noexcept {
    const double a = std::abs(t);
    if (a <= 1.0 || a >= 1.0 + eps_)
        return 0.0;
    const double e = eps_;
    const double d = 6.0 * (a * a - (e + 2.0) * a + 1.0 + e) / (e * e * e);
    return t < 0.0 ? -d : d;
}

double CutoffProfile::second(double t) const noexcept {
    const double a = std::abs(t);
    if (a <= 1.0 || a >= 1.0 + eps_)
        return 0.0;
    const double e = eps_;
    return (12.0 * a - 6.0 * (e + 2.0)) / (e * e * e);
}

double phi(double eps, double t) { return CutoffProfile(eps).value(t); }
double phi_prime(double eps, double t) { return CutoffProfile(eps).prime(t); }
double phi_second(double eps, double t) { return CutoffProfile(eps).second(t); }

OmegaValue omega(const ChannelGeometry& geom, double x, double y) {
    const CutoffProfile c(geom.h() - 1.0);
    const double px = c.value(x), dpx = c.prime(x), ddpx = c.second(x);
    const double py = c.value(y), dpy = c.prime(y), ddpy = c.second(y);
    return {1.0 - px * py, -dpx * py, -px * dpy, -ddpx * py, -dpx * dpy, -px * ddpy};
}

std::array<double, 2> psi(const ChannelGeometry& geom, double U, double x, double y) {
    const auto o = omega(geom, x, y);
    return {U * (o.w + y * o.wy), -U * y * o.wx};
}

PsiJacobian psi_jacobian(const ChannelGeometry& geom, double U, double x, double y) {
    const auto o = omega(geom, x, y);
    return {U * (o.wx + y * o.wxy), U * (2.0 * o.wy + y * o.wyy), -U * y * o.wxx, -U * (o.wx + y * o.wxy)};
}

namespace {
void require_height(double h) {
    if (!(h > 1.0) || !std::isfinite(h))
        throw DomainError("extension: need h > 1");
}
}  // namespace

double B1(double h) {
    require_height(h);
    const double d = h - 1.0;
    return 8.0 / 35.0 *
           (36.0 / 5.0 * (2.0 * h * h + 3.0 * h + 2.0) / (d * d) +
            6.0 / 5.0 * (13.0 * h + 22.0) * (3.0 * h * h - h + 3.0) / (d * d * d) +
            (19.0 * h * h * h + 51.0 * h * h + 75.0 * h + 65.0) / (3.0 * d * d * d));
}

double B2(double R, double h) {
    require_height(h);
    if (!(R > 1.0))
        throw DomainError("extension: need R > 1");
    const double d = h - 1.0;
    const double h2 = h * h, h3 = h2 * h, h4 = h3 * h, h5 = h4 * h;
    return 4.0 * R * h +
           4.0 * (82563626.0 + 139273674.0 * h + 131633079.0 * h2 + 47395086.0 * h3) / (75150075.0 * d) +
           4.0 * (6562533.0 + 20038773.0 * h + 29176308.0 * h2 + 22648263.0 * h3 + 5977793.0 * h4) /
               (25050025.0 * d * d) +
           288.0 *
               (1561958.0 + 3280874.0 * h + 4160951.0 * h2 + 3491837.0 * h3 + 1768313.0 * h4 + 336653.0 * h5) /
               (425850425.0 * d * d * d);
}

double b2_exact(double R, double h) {
    require_height(h);
    if (!(R > 1.0))
        throw DomainError("extension: need R > 1");
    const double d = h - 1.0;
    const double h2 = h * h, h3 = h2 * h, h4 = h3 * h, h5 = h4 * h;
    return 4.0 * R * h + 4.0 *
                             (1011981090.0 * h5 + 1495360527.0 * h4 - 173841573.0 * h3 + 41135272.0 * h2 +
                              362811451.0 * h + 416279809.0) /
                             (1277551275.0 * d * d * d);
}

double ExtensionField::grad_norm() const { return std::sqrt(B1) * U; }
double ExtensionField::l4_norm() const { return std::pow(B2, 0.25) * U; }

ExtensionField make_extension(const ChannelGeometry& geom, double U) {
    if (!(U > 0.0) || !std::isfinite(U))
        throw DomainError("make_extension: U must be positive");
    return {geom, U, B1(geom.h()), B2(geom.R(), geom.h())};
}

namespace {

double integrate_split(const ChannelGeometry& geom, const quadrature::Field2D& f,
                       const quadrature::QuadratureRule& rule) {
    const double R = geom.R();
    const double h = geom.h();
    double total = quadrature::integrate_value(quadrature::PiercedRectangle{h, h}, f, rule);
    // integrand is smooth (constant for Psi) in the far field: one panel per unit of rule.panels
    quadrature::QuadratureRule far = rule;
    far.max_width = std::max(rule.max_width, (R - h) / rule.panels);
    for (double sgn : {-1.0, 1.0}) {
        const double a = sgn < 0 ? -R : h;
        const double b = sgn < 0 ? -h : R;
        total += quadrature::integrate_value(quadrature::Rectangle{a, b, -h, h, {}, {-1.0, 1.0}}, f, far);
    }
    return total;
}

}  // namespace

QuadratureNorms quadrature_norms(const ChannelGeometry& geom, const quadrature::QuadratureRule& rule) {
    const auto grad = [&](double x, double y) { return psi_jacobian(geom, 1.0, x, y).frobenius_sq(); };
    const auto l4 = [&](double x, double y) {
        const auto p = psi(geom, 1.0, x, y);
        const double s = p[0] * p[0] + p[1] * p[1];
        return s * s;
    };
    const double g1 = integrate_split(geom, grad, rule);
    const double g2 = integrate_split(geom, grad, rule.doubled());
    const double l1 = integrate_split(geom, l4, rule);
    const double l2 = integrate_split(geom, l4, rule.doubled());
    return {{g1, std::abs(g1 - g2)}, {l1, std::abs(l1 - l2)}};
}

double boundary_flux(const ChannelGeometry& geom, double U, const quadrature::QuadratureRule& rule) {
    using quadrature::Interval;
    const double R = geom.R();
    const double h = geom.h();
    const std::vector<double> kinks{-h, -1.0, 1.0, h};
    double flux = 0.0;
    flux += quadrature::integrate_value(Interval{-h, h, kinks}, [&](double y) { return psi(geom, U, R, y)[0]; }, rule);
    flux -= quadrature::integrate_value(Interval{-h, h, kinks}, [&](double y) { return psi(geom, U, -R, y)[0]; }, rule);
    flux += quadrature::integrate_value(Interval{-R, R, kinks}, [&](double x) { return psi(geom, U, x, h)[1]; }, rule);
    flux -= quadrature::integrate_value(Interval{-R, R, kinks}, [&](double x) { return psi(geom, U, x, -h)[1]; }, rule);
    // unit circle: outward normal of Omega_R points to the origin
    flux -= quadrature::integrate_value(
        Interval{0.0, 2.0 * std::numbers::pi},
        [&](double t) {
            const double c = std::cos(t), s = std::sin(t);
            const auto p = psi(geom, U, c, s);
            return p[0] * c + p[1] * s;
        },
        rule);
    return flux;
}

std::vector<PsiSample> sample_grid(const ChannelGeometry& geom, double U, int nx, int ny) {
    if (nx < 2 || ny < 2)
        throw DomainError("sample_grid: need at least 2 points per axis");
    std::vector<PsiSample> out;
    out.reserve(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j) {
        const double y = -geom.h() + 2.0 * geom.h() * j / (ny - 1);
        for (int i = 0; i < nx; ++i) {
            const double x = -geom.R() + 2.0 * geom.R() * i / (nx - 1);
            const auto p = psi(geom, U, x, y);
            out.push_back({x, y, p[0], p[1]});
        }
    }
    return out;
}

std::vector<std::array<double, 2>> interior_samples(const ChannelGeometry& geom, int n, std::uint64_t seed) {
    if (n < 0)
        throw DomainError("interior_samples: n must be nonnegative");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(-geom.R(), geom.R());
    std::uniform_real_distribution<double> uy(-geom.h(), geom.h());
    std::vector<std::array<double, 2>> pts;
    pts.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(pts.size()) < n) {
        const double x = ux(rng);
        const double y = uy(rng);
        if (geom.contains(x, y))
            pts.push_back({x, y});
    }
    return pts;
}

double max_divergence(const ChannelGeometry& geom, double U, const std::vector<std::array<double, 2>>& points) {
    double m = 0.0;
    for (const auto& p : points)
        m = std::max(m, std::abs(psi_jacobian(geom, U, p[0], p[1]).divergence()));
    return m;
}

}  // namespace ofb::extension
