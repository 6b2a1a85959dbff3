#include "euler2d/atlas.hpp"

#include <cmath>
#include <cstdio>

namespace euler2d {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

// C-infinity plateau bump on [0,1]: 1 on [0,p], exponential decay to 0 at 1.
double plateau(double t, double p) {
    if (t <= p) return 1.0;
    if (t >= 1.0) return 0.0;
    const double v = (t - p) / (1.0 - p);
    return std::exp(1.0 - 1.0 / (1.0 - v * v));
}

double wrap_angle(double a) {
    while (a > M_PI) a -= kTwoPi;
    while (a < -M_PI) a += kTwoPi;
    return a;
}
} // namespace

Vec2 Chart::theta(double x1, double x2) const {
    if (kind == Kind::interior) {
        if (is_strip) return {x1, strip_depth * x2};
        return offset + Vec2{scale * (x1 - 0.5), scale * (x2 - 0.5)};
    }
    if (is_strip) return {x1, strip_depth * x2};
    const double u = W * (x1 - 0.5);
    const double w = psi(x1) + x2 / W;
    const double rot = phi_c + M_PI / 2.0;
    const double c = std::cos(rot), s = std::sin(rot);
    return {c * u - s * w, s * u + c * w};
}

double Chart::psi(double x1) const {
    if (is_strip || kind == Kind::interior) return 0.0;
    const double u = W * (x1 - 0.5);
    return -std::sqrt(R * R - u * u);
}

Mat2 Chart::grad_theta(double x1, double x2) const {
    (void)x2;
    Mat2 J;
    if (kind == Kind::interior) {
        if (is_strip) { J.m[0][0] = 1.0; J.m[1][1] = strip_depth; return J; }
        J.m[0][0] = scale; J.m[1][1] = scale;
        return J;
    }
    if (is_strip) { J.m[0][0] = 1.0; J.m[1][1] = strip_depth; return J; }
    const double u = W * (x1 - 0.5);
    const double dpsi = W * u / std::sqrt(R * R - u * u); // d psi / d x1
    const double rot = phi_c + M_PI / 2.0;
    const double c = std::cos(rot), s = std::sin(rot);
    // columns: d theta / d x1, d theta / d x2 (before rotation: (W, dpsi), (0, 1/W))
    J.m[0][0] = c * W - s * dpsi; J.m[0][1] = -s / W;
    J.m[1][0] = s * W + c * dpsi; J.m[1][1] = c / W;
    return J;
}

Vec2 Chart::theta_inv(Vec2 p) const {
    if (is_strip) return {p.x - std::floor(p.x), p.y / strip_depth};
    if (kind == Kind::interior) return {(p.x - offset.x) / scale + 0.5, (p.y - offset.y) / scale + 0.5};
    const double rot = phi_c + M_PI / 2.0;
    const double c = std::cos(rot), s = std::sin(rot);
    const double u = c * p.x + s * p.y;
    const double w = -s * p.x + c * p.y;
    const double x1 = u / W + 0.5;
    return {x1, W * (w + std::sqrt(R * R - u * u))};
}

double ChartAtlas::chi(double r) const {
    const double t = (spec.R - r) / collar_full;
    if (t <= 0.0) return 1.0;
    return plateau(t, collar_inner / collar_full);
}

double ChartAtlas::angle_bump(int l, double phi) const {
    const double off = wrap_angle(phi - charts[l].phi_c);
    return plateau(std::abs(off) / support_half_angle, 0.55);
}

double ChartAtlas::alpha(int l, Vec2 p) const {
    if (spec.mode == DomainMode::periodic_strip) return l == 0 ? 1.0 : 0.0;
    const double r = p.norm();
    const double ch = chi(r);
    if (l == K) return 1.0 - ch; // interior chart
    if (ch == 0.0) return 0.0;
    const double phi = std::atan2(p.y, p.x);
    double b = angle_bump(l, phi);
    if (b == 0.0) return 0.0;
    double sum = 0.0;
    for (int m = 0; m < K; ++m) sum += angle_bump(m, phi);
    return ch * b / sum;
}

double ChartAtlas::sqrt_alpha(int l, Vec2 p) const { return std::sqrt(alpha(l, p)); }

double ChartAtlas::alpha_sum(Vec2 p) const {
    double s = 0.0;
    for (size_t l = 0; l < charts.size(); ++l) s += alpha(static_cast<int>(l), p);
    return s;
}

double ChartAtlas::xi(Vec2 p) const {
    if (spec.mode == DomainMode::periodic_strip) {
        // xi == 1 for x2 > 0.75, 0 for x2 < 0.5 (reference coordinates)
        const double v = p.y / spec.depth;
        if (v >= 0.75) return 1.0;
        if (v <= 0.5) return 0.0;
        return plateau((0.75 - v) / 0.25, 0.0);
    }
    const double r = p.norm();
    const double t = (spec.R - r) / collar_inner;
    if (t <= 0.0) return 1.0;
    return plateau(t, xi_inner / collar_inner);
}

double ChartAtlas::beta_cut(Vec2 p) const { return 1.0 - xi(p); }

ChartAtlas build_atlas(const DomainSpec& spec) {
    if (spec.kappa0 <= 0.0) throw GeometryError("atlas: kappa0 margin must be positive");
    ChartAtlas atlas;
    atlas.spec = spec;

    if (spec.mode == DomainMode::periodic_strip) {
        Chart c;
        c.kind = Chart::Kind::boundary;
        c.id = 0;
        c.is_strip = true;
        c.strip_depth = spec.depth;
        c.grid = Grid::make(spec.chart_n1, spec.chart_n2, true, false, false, 0);
        atlas.charts.push_back(c);
        atlas.K = 1;
        atlas.kappa0 = 0.5; // no lateral support condition on the periodic chart
        return atlas;
    }

    if (spec.K < 3)
        throw GeometryError("atlas: disk mode needs K >= 3 boundary charts "
                            "(cannot cover the circle with the required overlap margin)");
    const double ws = M_PI / spec.K * (1.0 + spec.overlap); // support half-angle
    if (ws >= M_PI / 2.0)
        throw GeometryError("atlas: chart angular window reaches 90 degrees; "
                            "arc is no longer a graph (increase K or reduce overlap)");
    const double margin = spec.kappa0;
    if (margin >= 0.4) throw GeometryError("atlas: kappa0 margin too large (must be < 0.4)");
    const double W = spec.R * std::sin(ws) / (0.5 - margin - 0.02);
    const double sagitta = spec.R * (1.0 - std::cos(ws));
    const double avail = (1.0 - margin) / W - sagitta;
    if (avail <= 0.02 * spec.R) {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "atlas: charts cannot cover the circle with the required overlap margin "
                      "(K=%d: chart depth %.3f cannot contain the boundary collar below a "
                      "%.3f-deep arc; increase K)",
                      spec.K, 1.0 / W, sagitta);
        throw GeometryError(buf);
    }
    atlas.collar_full = std::min(0.3 * spec.R, 0.8 * avail);
    atlas.collar_inner = 0.4 * atlas.collar_full;
    atlas.xi_inner = 0.2 * atlas.collar_full;
    atlas.support_half_angle = ws;

    for (int l = 0; l < spec.K; ++l) {
        Chart c;
        c.kind = Chart::Kind::boundary;
        c.id = l;
        c.phi_c = kTwoPi * l / spec.K;
        c.W = W;
        c.R = spec.R;
        c.grid = Grid::make(spec.chart_n1, spec.chart_n2, false, false, false, l);
        atlas.charts.push_back(c);
    }
    Chart ci;
    ci.kind = Chart::Kind::interior;
    ci.id = spec.K;
    ci.scale = 2.0 * spec.R;
    ci.grid = Grid::make(spec.chart_n1, spec.chart_n2, false, false, false, spec.K);
    atlas.charts.push_back(ci);
    atlas.K = spec.K;

    // realized horizontal support margin of alpha_l o theta_l
    atlas.kappa0 = 0.5 - spec.R * std::sin(ws) / W;
    if (atlas.kappa0 < margin - 1e-12)
        throw GeometryError("atlas: realized support margin below requested kappa0");

    // validate the vertical margin numerically over the support
    double max_x2 = 0.0;
    for (int a = 0; a <= 40; ++a)
        for (int b = 0; b <= 40; ++b) {
            const double dphi = -ws + 2.0 * ws * a / 40.0;
            const double r = spec.R - atlas.collar_full + atlas.collar_full * b / 40.0;
            Vec2 p{r * std::cos(dphi), r * std::sin(dphi)}; // chart at phi_c = 0
            Vec2 x = atlas.charts[0].theta_inv(p);
            max_x2 = std::max(max_x2, x.y);
        }
    if (max_x2 > 1.0 - margin)
        throw GeometryError("atlas: collar support violates the top-edge margin");
    return atlas;
}

} // namespace euler2d
