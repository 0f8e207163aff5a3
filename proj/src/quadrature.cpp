#include "ofb/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "ofb/errors.hpp"

namespace ofb::quadrature {

void QuadratureRule::validate() const {
    if (order < 2)
        throw DomainError("quadrature: order must be >= 2");
    if (panels < 1)
        throw DomainError("quadrature: panels must be >= 1");
    if (!(max_width > 0.0))
        throw DomainError("quadrature: max_width must be > 0");
}

namespace {

GaussLegendre compute_gauss_legendre(int n) {
    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
        long double dp = 0.0L;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1.0L;
            long double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0L);
            const long double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-19L)
                break;
        }
        const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
        gl.nodes[i] = static_cast<double>(-x);
        gl.nodes[n - 1 - i] = static_cast<double>(x);
        gl.weights[i] = gl.weights[n - 1 - i] = static_cast<double>(w);
    }
    if (n % 2 == 1)
        gl.nodes[n / 2] = 0.0;
    return gl;
}

int panel_count(double len, const QuadratureRule& rule) {
    const int by_width = static_cast<int>(std::ceil(len / rule.max_width - 1e-12));
    return std::max(rule.panels, std::max(by_width, 1));
}

double checked(double v) {
    if (!std::isfinite(v))
        throw NonFinite("quadrature: integrand is not finite at a node");
    return v;
}

// Tensor nodes of a segment list: (abscissa, weight) pairs in panel order.
struct Nodes1D {
    std::vector<double> x;
    std::vector<double> w;
};

Nodes1D nodes_1d(std::span<const double> seg, const QuadratureRule& rule) {
    const auto& gl = gauss_legendre(rule.order);
    Nodes1D out;
    for (std::size_t s = 0; s + 1 < seg.size(); ++s) {
        const double a = seg[s];
        const double b = seg[s + 1];
        const int np = panel_count(b - a, rule);
        for (int p = 0; p < np; ++p) {
            const double pa = a + (b - a) * p / np;
            const double pb = a + (b - a) * (p + 1) / np;
            const double mid = 0.5 * (pa + pb);
            const double half = 0.5 * (pb - pa);
            for (int k = 0; k < rule.order; ++k) {
                out.x.push_back(mid + half * gl.nodes[k]);
                out.w.push_back(half * gl.weights[k]);
            }
        }
    }
    return out;
}

double tensor_sum(const Nodes1D& nx, const Nodes1D& ny, const Field2D& f) {
    double total = 0.0;
    for (std::size_t i = 0; i < nx.x.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < ny.x.size(); ++j)
            row += ny.w[j] * checked(f(nx.x[i], ny.x[j]));
        total += nx.w[i] * row;
    }
    return total;
}

double integrate_rectangle(const Rectangle& r, const Field2D& f, const QuadratureRule& rule) {
    const auto sx = segment_points(r.x0, r.x1, r.x_breaks);
    const auto sy = segment_points(r.y0, r.y1, r.y_breaks);
    return tensor_sum(nodes_1d(sx, rule), nodes_1d(sy, rule), f);
}

double integrate_annulus(const Annulus& an, const Field2D& f, const QuadratureRule& rule) {
    if (!(an.inner >= 0.0 && an.outer > an.inner))
        throw DomainError("quadrature: annulus needs 0 <= inner < outer");
    const auto sr = segment_points(an.inner, an.outer, an.r_breaks);
    const auto nr = nodes_1d(sr, rule);
    std::vector<double> st;
    for (int k = 0; k <= 8; ++k)
        st.push_back(k * std::numbers::pi / 4);
    // angular panels: scale width with the outer circumference
    QuadratureRule trule = rule;
    trule.max_width = rule.max_width / std::max(an.outer, 1.0);
    const auto nt = nodes_1d(st, trule);
    double total = 0.0;
    for (std::size_t i = 0; i < nr.x.size(); ++i) {
        const double r = nr.x[i];
        double ring = 0.0;
        for (std::size_t j = 0; j < nt.x.size(); ++j)
            ring += nt.w[j] * checked(f(an.cx + r * std::cos(nt.x[j]), an.cy + r * std::sin(nt.x[j])));
        total += nr.w[i] * r * ring;
    }
    return total;
}

// [-1,1]^2 minus the unit disk: theta in octants, r from 1 to the square edge.
double integrate_square_collar(const Field2D& f, const QuadratureRule& rule) {
    std::vector<double> st;
    for (int k = 0; k <= 8; ++k)
        st.push_back(k * std::numbers::pi / 4);
    const auto nt = nodes_1d(st, rule);
    const std::vector<double> unit{0.0, 1.0};
    QuadratureRule srule = rule;
    srule.max_width = rule.max_width / (std::numbers::sqrt2 - 1.0);
    const auto ns = nodes_1d(unit, srule);
    double total = 0.0;
    for (std::size_t j = 0; j < nt.x.size(); ++j) {
        const double c = std::cos(nt.x[j]);
        const double s = std::sin(nt.x[j]);
        const double rmax = 1.0 / std::max(std::abs(c), std::abs(s));
        const double span = rmax - 1.0;
        double ray = 0.0;
        for (std::size_t i = 0; i < ns.x.size(); ++i) {
            const double r = 1.0 + span * ns.x[i];
            ray += ns.w[i] * r * checked(f(r * c, r * s));
        }
        total += nt.w[j] * span * ray;
    }
    return total;
}

double integrate_pierced(const PiercedRectangle& pr, const Field2D& f, const QuadratureRule& rule) {
    if (!(pr.h > 1.0 && pr.R > 1.0))
        throw DomainError("quadrature: pierced rectangle needs R > 1 and h > 1");
    std::vector<double> xb = pr.x_breaks;
    for (double v : {-pr.h, -1.0, 1.0, pr.h})
        xb.push_back(v);
    const auto sx = segment_points(-pr.R, pr.R, xb);
    const auto sy = segment_points(-pr.h, pr.h, std::vector<double>{-1.0, 1.0});
    double total = 0.0;
    for (std::size_t a = 0; a + 1 < sx.size(); ++a) {
        for (std::size_t b = 0; b + 1 < sy.size(); ++b) {
            const bool core = sx[a] >= -1.0 && sx[a + 1] <= 1.0 && sy[b] >= -1.0 && sy[b + 1] <= 1.0;
            if (core)
                continue;
            const std::vector<double> cx{sx[a], sx[a + 1]};
            const std::vector<double> cy{sy[b], sy[b + 1]};
            total += tensor_sum(nodes_1d(cx, rule), nodes_1d(cy, rule), f);
        }
    }
    return total + integrate_square_collar(f, rule);
}

}  // namespace

const GaussLegendre& gauss_legendre(int order) {
    static std::mutex mutex;
    static std::map<int, GaussLegendre> cache;
    std::scoped_lock lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

std::vector<double> segment_points(double a, double b, std::span<const double> breakpoints) {
    if (!(b > a))
        throw DomainError("quadrature: empty interval");
    std::vector<double> pts{a, b};
    const double tol = 1e-12 * std::max(1.0, b - a);
    for (double p : breakpoints)
        if (p > a + tol && p < b - tol)
            pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(), [tol](double u, double v) { return std::abs(u - v) <= tol; }),
              pts.end());
    return pts;
}

double integrate_value(const Interval& region, const Field1D& f, const QuadratureRule& rule) {
    rule.validate();
    const auto seg = segment_points(region.a, region.b, region.breakpoints);
    const auto n = nodes_1d(seg, rule);
    double total = 0.0;
    for (std::size_t i = 0; i < n.x.size(); ++i)
        total += n.w[i] * checked(f(n.x[i]));
    return total;
}

double integrate_value(const Region2D& region, const Field2D& f, const QuadratureRule& rule) {
    rule.validate();
    return std::visit(
        [&](const auto& r) -> double {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Rectangle>)
                return integrate_rectangle(r, f, rule);
            else if constexpr (std::is_same_v<T, Annulus>)
                return integrate_annulus(r, f, rule);
            else
                return integrate_pierced(r, f, rule);
        },
        region);
}

Estimate integrate(const Interval& region, const Field1D& f, const QuadratureRule& rule) {
    const double v = integrate_value(region, f, rule);
    const double v2 = integrate_value(region, f, rule.doubled());
    return {v, std::abs(v - v2)};
}

Estimate integrate(const Region2D& region, const Field2D& f, const QuadratureRule& rule) {
    const double v = integrate_value(region, f, rule);
    const double v2 = integrate_value(region, f, rule.doubled());
    return {v, std::abs(v - v2)};
}

double norm_Lp(const Region2D& region, const Field2D& f, int p, const QuadratureRule& rule) {
    if (p != 1 && p != 2 && p != 4)
        throw DomainError("norm_Lp: p must be 1, 2 or 4, got " + std::to_string(p));
    const double s = integrate_value(
        region, [&](double x, double y) { return std::pow(std::abs(f(x, y)), p); }, rule);
    return std::pow(s, 1.0 / p);
}

double norm_L2_grad(const Region2D& region, const Field2D& fx, const Field2D& fy, const QuadratureRule& rule) {
    const double s = integrate_value(
        region,
        [&](double x, double y) {
            const double a = fx(x, y);
            const double b = fy(x, y);
            return a * a + b * b;
        },
        rule);
    return std::sqrt(s);
}

}  // namespace ofb::quadrature
