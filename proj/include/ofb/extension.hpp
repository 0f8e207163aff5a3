/// @file extension.hpp
/// @brief Explicit solenoidal extension Psi_R of the boundary velocity (U, 0).
///
/// With the C^1 cubic cutoff phi_eps (1 on [-1,1], 0 outside [-1-eps, 1+eps])
/// and omega(x,y) = 1 - phi_{h-1}(x) phi_{h-1}(y):
///
///     Psi_R = U (omega + y d_y omega, -y d_x omega).
///
/// Psi_R is divergence free, equals (U, 0) for |x| >= h and on y = +-h, and
/// vanishes on [-1,1]^2. Its norms are given in closed form by B1 (gradient)
/// and B2 (L4). B1 is exact. The closed-form B2 overestimates the true L4
/// norm; b2_exact() comes from exact symbolic integration of the same field
/// and is what quadrature reproduces.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ofb/geometry.hpp"
#include "ofb/quadrature.hpp"

namespace ofb::extension {

class CutoffProfile {
public:
    /// Throws DomainError if eps <= 0.
    explicit CutoffProfile(double eps);

    [[nodiscard]] double eps() const noexcept { return eps_; }
    [[nodiscard]] double value(double t) const noexcept;
    [[nodiscard]] double prime(double t) const noexcept;
    /// One-sided at the branch points |t| = 1, 1 + eps (phi'' jumps there).
    [[nodiscard]] double second(double t) const noexcept;

    /// 3 / (2 eps) and 6 / eps^2.
    [[nodiscard]] double prime_sup() const noexcept { return 1.5 / eps_; }
    [[nodiscard]] double second_sup() const noexcept { return 6.0 / (eps_ * eps_); }

private:
    double eps_;
};

double phi(double eps, double t);
double phi_prime(double eps, double t);
double phi_second(double eps, double t);

struct OmegaValue {
    double w, wx, wy, wxx, wxy, wyy;
};

/// omega and its derivatives through second order.
OmegaValue omega(const ChannelGeometry& geom, double x, double y);

/// Psi_R(x, y).
std::array<double, 2> psi(const ChannelGeometry& geom, double U, double x, double y);

struct PsiJacobian {
    double p1x, p1y, p2x, p2y;
    [[nodiscard]] double divergence() const noexcept { return p1x + p2y; }
    [[nodiscard]] double frobenius_sq() const noexcept { return p1x * p1x + p1y * p1y + p2x * p2x + p2y * p2y; }
};

PsiJacobian psi_jacobian(const ChannelGeometry& geom, double U, double x, double y);

/// Closed forms. B1 depends on h only; B2 = 4Rh + (function of h).
double B1(double h);
double B2(double R, double h);
/// Exact ||Psi_R||^4_{L4} / U^4 for the constructed field.
double b2_exact(double R, double h);

struct ExtensionField {
    ChannelGeometry geom;
    double U;
    double B1;
    double B2;

    [[nodiscard]] double grad_norm() const;  ///< sqrt(B1) U
    [[nodiscard]] double l4_norm() const;    ///< B2^(1/4) U
};

ExtensionField make_extension(const ChannelGeometry& geom, double U);

struct QuadratureNorms {
    quadrature::Estimate grad_sq;  ///< ||grad Psi||^2 / U^2
    quadrature::Estimate l4_4;     ///< ||Psi||^4_{L4} / U^4
};

/// Integrates over Omega_R split into the pierced square |x| < h and the two
/// far rectangles h < |x| < R, with panels aligned to |x|, |y| in {1, h}.
QuadratureNorms quadrature_norms(const ChannelGeometry& geom, const quadrature::QuadratureRule& rule = {});

/// Outward flux of Psi_R through the boundary of Omega_R (outer rectangle and
/// the unit circle).
double boundary_flux(const ChannelGeometry& geom, double U, const quadrature::QuadratureRule& rule = {});

struct PsiSample {
    double x, y, psi_x, psi_y;
};

/// Psi_R on an nx-by-ny uniform grid over the closed rectangle, row-major in y.
std::vector<PsiSample> sample_grid(const ChannelGeometry& geom, double U, int nx, int ny);

/// n points drawn uniformly from the open domain (rejection sampling, fixed seed).
std::vector<std::array<double, 2>> interior_samples(const ChannelGeometry& geom, int n, std::uint64_t seed = 1);

/// max |div Psi| over the given points.
double max_divergence(const ChannelGeometry& geom, double U, const std::vector<std::array<double, 2>>& points);

}  // namespace ofb::extension
