/// @file threshold.hpp
/// @brief Sufficient condition for a unique (and mirror-symmetric) weak
///        solution of stationary flow past the obstacle, and growth diagnostics
///        for the solenoidal extension family.
///
/// Uniqueness holds when 2 ||grad Psi|| + sqrt(S) ||Psi||_{L4} < eta S. S_R is
/// not known exactly, so the certified surrogate is the rectangle Poincare arm
/// of the lower bound,
///     S_low = (pi/2) sqrt(3 pi / 2) sqrt(R^2 + h^2) / (Rh) <= S_R.
/// The left side over the right side, (2 g + sqrt(S) l) / (eta S), decreases
/// in S, so using S_low <= S_R can only make the test stricter. With
/// ||grad Psi|| = sqrt(B1) U and ||Psi||_{L4} = B2^(1/4) U the condition is
/// exactly U / eta < re_bar(R, h).
#pragma once

#include <string>
#include <vector>

#include "ofb/geometry.hpp"
#include "ofb/quadrature.hpp"

namespace ofb::threshold {

struct ThresholdReport {
    ChannelGeometry geom;
    FlowParams flow;
    double S_R_lower;
    double grad_psi;
    double l4_psi;
    double lhs_umbral;  ///< 2 ||grad Psi|| + sqrt(S) ||Psi||_{L4}
    double rhs_umbral;  ///< eta S
    bool unique_certified;
    double re_bar;
    double grad_u_bound;  ///< 3 ||grad Psi||
    double eps_h;
    double B1;
    double B2;
    /// Direction of the S_R substitution, for the printed report.
    std::string surrogate_note;
};

/// The uniqueness predicate for given norms and Sobolev constant.
bool umbral_condition(double grad_psi, double l4_psi, double S, double eta);

double sobolev_surrogate(const ChannelGeometry& geom);

ThresholdReport certify_uniqueness(const ChannelGeometry& geom, const FlowParams& flow);

/// Explicit Reynolds-number bound (dimensionless; depends on R, h only).
double re_bar(const ChannelGeometry& geom);

/// Unique positive root of (2h / (3 pi^3)) e^4 + (2 sqrt 2 / h^(1/4)) e = 1.
double eps_growth(double h);
/// Left side minus 1, for residual checks.
double eps_equation(double h, double e);

struct GrowthRow {
    double R;
    double grad_norm;  ///< ||grad Psi_R||, U = 1, by quadrature
    double l4_norm;    ///< ||Psi_R||_{L4}, U = 1, by quadrature
    double ratio;      ///< (grad_norm + l4_norm) / R^(1/4)
    double l4_ratio;   ///< l4_norm / R^(1/4)
};

struct GrowthTable {
    double h;
    double eps_h;
    double limit;  ///< (4h)^(1/4)
    std::vector<GrowthRow> rows;
    bool above_limit;   ///< every ratio >= limit
    bool above_eps;     ///< every ratio >= eps_h
    bool decreasing;    ///< ratios strictly decrease along R_list
};

/// R_list must be increasing with every R > h.
GrowthTable growth_diagnostic(double h, const std::vector<double>& R_list,
                              const quadrature::QuadratureRule& rule = {});

}  // namespace ofb::threshold
