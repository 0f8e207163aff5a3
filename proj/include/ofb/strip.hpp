/// @file strip.hpp
/// @brief Separated-variables upper bound for the Sobolev constant of the
///        infinite strip R x (-h, h).
///
/// Transverse profile  W_h(y) = cn(alpha y / h) / mu_h,  normalized in L4(-h,h).
/// Longitudinal profile V(x) = sech(x / a), a = ||W_h||_{L2}; with ||W_h'|| = 1
/// it solves -a^2 V'' + V = 2 V^3. The height h0 with ||W_h0'||_{L2} = 1 fixes
/// the calibration; the quotient scales like 1/h, so c_upper = h0 * quotient(h0)
/// gives S_inf(h) <= c_upper / h for every h.
#pragma once

#include "ofb/quadrature.hpp"

namespace ofb::strip {

struct StripMinimizerResult {
    double alpha;     ///< first zero of cn
    double h0;        ///< height with ||W'_{h0}||_{L2} = 1
    double mu_h0;     ///< L4 normalization at h0
    double w_l2;      ///< ||W_{h0}||_{L2}, the sech length scale
    double quotient;  ///< separated Rayleigh quotient at h0
    double c_upper;   ///< quotient * h0
    double lambda;    ///< Lagrange multiplier of the V equation (2)
    double el_residual_max;  ///< max |-a^2 V'' + V - 2V^3| over sampled x
};

/// Rule used for all 1-D profile integrals; order 20 panels of width <= 0.125.
quadrature::QuadratureRule profile_rule();

/// (int_{-h}^{h} cn(alpha y / h)^4 dy)^(1/4).
double normalization_mu(double h, const quadrature::QuadratureRule& rule = profile_rule());

double w_profile(double h, double y);
double w_profile_prime(double h, double y);

/// ||W_h||_{L2(-h,h)} and ||W_h'||_{L2(-h,h)}.
double w_l2(double h, const quadrature::QuadratureRule& rule = profile_rule());
double w_prime_l2(double h, const quadrature::QuadratureRule& rule = profile_rule());
/// ||W_h||_{L4(-h,h)}; equals 1 by construction.
double w_l4(double h, const quadrature::QuadratureRule& rule = profile_rule());

/// Root of ||W_h'||_{L2} - 1 on (1.1, 10); throws BracketError if there is no sign change.
double find_h0();

/// V(x) = sech(x / a) and its first two derivatives.
double sech_profile(double x, double a);
double sech_profile_prime(double x, double a);
double sech_profile_second(double x, double a);

/// -a^2 V''(x) + V(x) - lambda V(x)^3 for V = sech(. / a).
double euler_lagrange_residual(double x, double a, double lambda);

/// ||V||^2_{L2}, ||V'||^2_{L2}, ||V||^4_{L4} on R by quadrature on |x| <= 40 a.
struct SechIntegrals {
    double l2_sq;
    double prime_l2_sq;
    double l4_4;
};
SechIntegrals sech_integrals(double a, const quadrature::QuadratureRule& rule = profile_rule());

/// Separated quotient at height h with V = sech(x * ||W_h'|| / ||W_h||), the
/// optimal longitudinal profile for W_h. Scales exactly like 1/h.
double separated_quotient_at(double h);

/// Full pipeline at h0; cached after the first call.
const StripMinimizerResult& separated_quotient();

}  // namespace ofb::strip
