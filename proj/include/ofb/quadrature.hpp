/// @file quadrature.hpp
/// @brief Composite Gauss-Legendre quadrature on intervals, rectangles,
///        annuli (polar) and the pierced rectangle.
///
/// Every region is cut at caller-supplied breakpoints so that no panel
/// straddles a kink of a piecewise-smooth integrand. Each segment between two
/// breakpoints is split into max(panels, ceil(length / max_width)) panels.
/// Panel contributions are accumulated sequentially in panel order, so results
/// are bit-reproducible.
#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

namespace ofb::quadrature {

struct QuadratureRule {
    int order = 12;          ///< Gauss points per panel (>= 2)
    int panels = 1;          ///< minimum panels per segment (>= 1)
    double max_width = 0.25; ///< maximum panel width (> 0)

    /// Same order, twice the panel count.
    [[nodiscard]] QuadratureRule doubled() const { return {order, 2 * panels, 0.5 * max_width}; }
    void validate() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached; thread-safe.
const GaussLegendre& gauss_legendre(int order);

struct Interval {
    double a;
    double b;
    std::vector<double> breakpoints{};  ///< interior kinks, any order
};

struct Rectangle {
    double x0, x1, y0, y1;
    std::vector<double> x_breaks{};
    std::vector<double> y_breaks{};
};

/// inner <= r <= outer around (cx, cy), integrated in polar coordinates.
/// inner = 0 gives a disk.
struct Annulus {
    double cx = 0.0;
    double cy = 0.0;
    double inner = 1.0;
    double outer = 2.0;
    std::vector<double> r_breaks{};
};

/// (-R, R) x (-h, h) minus the closed unit disk. Always cut at x, y in {+-1, +-h};
/// the square [-1,1]^2 minus the disk is integrated in polar coordinates with
/// the radial variable running from 1 to the square's edge.
struct PiercedRectangle {
    double R;
    double h;
    std::vector<double> x_breaks{};
};

using Region2D = std::variant<Rectangle, Annulus, PiercedRectangle>;

using Field1D = std::function<double(double)>;
using Field2D = std::function<double(double, double)>;

struct Estimate {
    double value;
    double error;  ///< |value - value with doubled panels|
};

/// Single pass. Throws NonFinite if f is not finite at some node.
double integrate_value(const Interval& region, const Field1D& f, const QuadratureRule& rule);
double integrate_value(const Region2D& region, const Field2D& f, const QuadratureRule& rule);

/// Value with the paired doubled-panel error estimate.
Estimate integrate(const Interval& region, const Field1D& f, const QuadratureRule& rule);
Estimate integrate(const Region2D& region, const Field2D& f, const QuadratureRule& rule);

/// (int |f|^p)^(1/p), p in {1, 2, 4}.
double norm_Lp(const Region2D& region, const Field2D& f, int p, const QuadratureRule& rule);
/// (int fx^2 + fy^2)^(1/2).
double norm_L2_grad(const Region2D& region, const Field2D& fx, const Field2D& fy,
                    const QuadratureRule& rule);

/// Sorted, deduplicated segment endpoints of [a, b] including breakpoints
/// that fall strictly inside. Exposed for tests.
std::vector<double> segment_points(double a, double b, std::span<const double> breakpoints);

}  // namespace ofb::quadrature
