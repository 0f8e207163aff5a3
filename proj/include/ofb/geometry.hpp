/// @file geometry.hpp
/// @brief Pierced rectangle, strip and flow parameters.
///
/// The fluid domain is Q_R = (-R,R) x (-h,h) with the closed unit disk removed.
/// All formulas in the library assume R > h > 1; construction enforces it.
#pragma once

namespace ofb {

class ChannelGeometry {
public:
    /// Throws DomainError unless R > h > 1.
    ChannelGeometry(double R, double h);

    [[nodiscard]] double R() const noexcept { return R_; }
    [[nodiscard]] double h() const noexcept { return h_; }
    [[nodiscard]] static constexpr double obstacle_radius() noexcept { return 1.0; }

    /// Open-set membership: |x| < R, |y| < h and x^2 + y^2 > 1.
    [[nodiscard]] bool contains(double x, double y) const noexcept;

    /// 4Rh - pi.
    [[nodiscard]] double area() const noexcept;

private:
    double R_;
    double h_;
};

/// Free function form used by the CLI and tests.
[[nodiscard]] inline bool contains(const ChannelGeometry& g, double x, double y) noexcept {
    return g.contains(x, y);
}

class FlowParams {
public:
    /// Throws DomainError unless U > 0 and eta > 0.
    FlowParams(double U, double eta);

    [[nodiscard]] double U() const noexcept { return U_; }
    [[nodiscard]] double eta() const noexcept { return eta_; }

private:
    double U_;
    double eta_;
};

class StripGeometry {
public:
    explicit StripGeometry(double h);
    [[nodiscard]] double h() const noexcept { return h_; }

private:
    double h_;
};

}  // namespace ofb
