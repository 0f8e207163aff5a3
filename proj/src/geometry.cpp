#include "ofb/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ofb/errors.hpp"

namespace ofb {

ChannelGeometry::ChannelGeometry(double R, double h) : R_(R), h_(h) {
    if (!std::isfinite(R) || !std::isfinite(h))
        throw DomainError("geometry: R and h must be finite");
    if (!(h > 1.0))
        throw DomainError("geometry: need h > 1 (obstacle radius is 1), got h = " + std::to_string(h));
    if (!(R > h))
        throw DomainError("geometry: need R > h, got R = " + std::to_string(R) +
                          ", h = " + std::to_string(h));
}

bool ChannelGeometry::contains(double x, double y) const noexcept {
    return std::abs(x) < R_ && std::abs(y) < h_ && x * x + y * y > 1.0;
}

double ChannelGeometry::area() const noexcept {
    return 4.0 * R_ * h_ - std::numbers::pi;
}

FlowParams::FlowParams(double U, double eta) : U_(U), eta_(eta) {
    if (!(U > 0.0) || !std::isfinite(U))
        throw DomainError("flow: need U > 0");
    if (!(eta > 0.0) || !std::isfinite(eta))
        throw DomainError("flow: need eta > 0");
}

StripGeometry::StripGeometry(double h) : h_(h) {
    if (!(h > 1.0) || !std::isfinite(h))
        throw DomainError("strip: need h > 1");
}

}  // namespace ofb
