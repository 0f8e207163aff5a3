#include "ofb/threshold.hpp"

#include <cmath>
#include <numbers>

#include "ofb/bounds.hpp"
#include "ofb/errors.hpp"
#include "ofb/extension.hpp"

namespace ofb::threshold {

using std::numbers::pi;

bool umbral_condition(double grad_psi, double l4_psi, double S, double eta) {
    return 2.0 * grad_psi + std::sqrt(S) * l4_psi < eta * S;
}

double sobolev_surrogate(const ChannelGeometry& geom) {
    return bounds::rectangle_sobolev_lower(geom.R(), geom.h());
}

double re_bar(const ChannelGeometry& geom) {
    const double R = geom.R();
    const double h = geom.h();
    const double rr = R * R + h * h;
    const double num = bounds::strip_lower_constant() * std::sqrt(rr) / (R * h);
    const double den = 2.0 * std::sqrt(extension::B1(h)) +
                       std::sqrt(pi / (2.0 * R * h)) * std::pow(1.5 * pi * extension::B2(R, h) * rr, 0.25);
    return num / den;
}

ThresholdReport certify_uniqueness(const ChannelGeometry& geom, const FlowParams& flow) {
    const auto ext = extension::make_extension(geom, flow.U());
    const double S = sobolev_surrogate(geom);
    ThresholdReport r{geom, flow, S, ext.grad_norm(), ext.l4_norm(), 0, 0, false, re_bar(geom), 0, 0, ext.B1, ext.B2,
                      "S_R replaced by its certified lower bound; a smaller S only makes the test stricter"};
    r.lhs_umbral = 2.0 * r.grad_psi + std::sqrt(S) * r.l4_psi;
    r.rhs_umbral = flow.eta() * S;
    r.unique_certified = r.lhs_umbral < r.rhs_umbral;
    r.grad_u_bound = 3.0 * r.grad_psi;
    r.eps_h = eps_growth(geom.h());
    return r;
}

double eps_equation(double h, double e) {
    return 2.0 * h / (3.0 * pi * pi * pi) * e * e * e * e + 2.0 * std::numbers::sqrt2 / std::pow(h, 0.25) * e - 1.0;
}

double eps_growth(double h) {
    if (!(h > 1.0) || !std::isfinite(h))
        throw DomainError("eps_growth: need h > 1");
    // f(0) = -1 and f is increasing on [0, inf); the linear term alone reaches 1 at hi
    double lo = 0.0;
    double hi = std::pow(h, 0.25) / (2.0 * std::numbers::sqrt2);
    while (eps_equation(h, hi) < 0.0)
        hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        if (eps_equation(h, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return std::abs(eps_equation(h, lo)) <= std::abs(eps_equation(h, hi)) ? lo : hi;
}

GrowthTable growth_diagnostic(double h, const std::vector<double>& R_list, const quadrature::QuadratureRule& rule) {
    GrowthTable t{h, eps_growth(h), std::pow(4.0 * h, 0.25), {}, true, true, true};
    double prev_R = 0.0;
    for (double R : R_list) {
        if (!(R > prev_R))
            throw DomainError("growth_diagnostic: R_list must be increasing");
        prev_R = R;
        const ChannelGeometry geom(R, h);
        const auto norms = extension::quadrature_norms(geom, rule);
        GrowthRow row{};
        row.R = R;
        row.grad_norm = std::sqrt(norms.grad_sq.value);
        row.l4_norm = std::pow(norms.l4_4.value, 0.25);
        row.ratio = (row.grad_norm + row.l4_norm) / std::pow(R, 0.25);
        row.l4_ratio = row.l4_norm / std::pow(R, 0.25);
        if (!t.rows.empty() && !(row.ratio < t.rows.back().ratio))
            t.decreasing = false;
        t.above_limit = t.above_limit && row.ratio >= t.limit;
        t.above_eps = t.above_eps && row.ratio >= t.eps_h;
        t.rows.push_back(row);
    }
    return t;
}

}  // namespace ofb::threshold
