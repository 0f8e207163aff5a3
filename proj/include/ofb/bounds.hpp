/// @file bounds.hpp
/// @brief Explicit lower and upper bounds on the Sobolev constant S_R of the
///        pierced rectangle and on its strip limit S_inf.
///
/// Lower bound: pi sqrt(3/2) max{ (sqrt(pi)/2) sqrt(R^2+h^2)/(Rh), mu0/sqrt(4Rh - pi) },
/// from the Gagliardo-Nirenberg/Holder inequality combined with the rectangle
/// Poincare constant and Faber-Krahn.
///
/// Upper bounds come from two test functions:
///   X0(x,y) = (h - r) log(r^2) / 2 on 1 < r < h, zero beyond;
///   X1(x,y) = h^2 - (x - (R+1)/2)^2 - y^2 on the disk D_{R,h}, usable when R < 2h + 1.
#pragma once

#include <optional>
#include <utility>

#include "ofb/geometry.hpp"
#include "ofb/quadrature.hpp"

namespace ofb::bounds {

struct BoundsReport {
    double lower_poincare;
    double lower_faberkrahn;
    double lower;
    double upper_X0;
    std::optional<double> upper_X1;
    double kappa;
    double strip_lower;
    double strip_upper_X0;
    double strip_upper_sep;
};

/// (pi/2) sqrt(3 pi / 2): S_inf(h) >= this / h.
double strip_lower_constant();

/// kappa(h) = int_1^h (h - r)^4 log(r)^4 r dr, i.e. ||X0||^4_{L4} / (2 pi).
/// Closed-form polynomial-in-log(h) for h >= 1.25 (long double, Neumaier
/// summation); the integral form below that, where the closed form cancels
/// to nothing. Throws DomainError if h <= 1.
double kappa(double h);
/// The closed-form polynomial alone, for cross-checks.
double kappa_closed_form(double h);

/// 2 h^2 log(h)^2 - 2 h^2 log(h) + h^2 - 1 = 4 ||grad X0||^2 / (2 pi).
double x0_numerator(double h);

/// (sqrt(pi)/2) sqrt(R^2+h^2)/(Rh) and mu0/sqrt(4Rh - pi).
std::pair<double, double> lower_bound_arms(const ChannelGeometry& geom);
double lower_bound(const ChannelGeometry& geom);

/// (1/2) sqrt(pi / (2 kappa)) * x0_numerator(h).
double upper_bound_X0(double h);

/// 2 sqrt(5 pi) / h when R < 2h + 1.
std::optional<double> upper_bound_X1(const ChannelGeometry& geom);

/// Returns (lower, min(upper_X0(h), sep_upper)).
std::pair<double, double> strip_bounds(double h, double sep_upper);

/// The rectangle-only constant (pi/2) sqrt(3 pi / 2) sqrt(R^2+h^2)/(Rh): every
/// w in H^1_0(Q_R) has ||grad w||^2 >= this * ||w||^2_{L4}.
double rectangle_sobolev_lower(double R, double h);

BoundsReport bounds_report(const ChannelGeometry& geom);

// Test functions and their quadrature Rayleigh quotients (the oracle side).

double x0(double h, double x, double y);
double x0_dx(double h, double x, double y);
double x0_dy(double h, double x, double y);
double x1(const ChannelGeometry& geom, double x, double y);

/// ||grad X0||^2 / ||X0||^2_{L4} by polar quadrature on 1 <= r <= h.
double x0_quadrature_quotient(double h, const quadrature::QuadratureRule& rule = {});
/// ||grad X1||^2 / ||X1||^2_{L4} by polar quadrature on D_{R,h}.
double x1_quadrature_quotient(const ChannelGeometry& geom, const quadrature::QuadratureRule& rule = {});

/// Ratio upper_X0(h) * h / strip_lower_constant() evaluated through
/// L = log(h) only, valid for h -> infinity without overflow. Exposed so that
/// the slow 1/log(h) approach to 2 sqrt(10)/pi can be tabulated.
double x0_ratio_asymptotic(double log_h);

}  // namespace ofb::bounds
