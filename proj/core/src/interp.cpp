#include "euler2d/interp.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace euler2d {

namespace {

// 4-point Lagrange weights for evaluation at offset t in [0,1] relative to
// the second stencil node (nodes at -1, 0, 1, 2).
inline void lagrange4(double t, double w[4]) {
    w[0] = -t * (t - 1.0) * (t - 2.0) / 6.0;
    w[1] = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
    w[2] = -(t + 1.0) * t * (t - 2.0) / 2.0;
    w[3] = (t + 1.0) * t * (t - 1.0) / 6.0;
}

struct AxisStencil {
    int base;    // index of stencil node 0
    double w[4]; // weights
};

inline AxisStencil axis_stencil(double u, double h, int n, Wrap wrap, bool* ok) {
    AxisStencil s;
    *ok = true;
    double r = u / h;
    if (wrap == Wrap::periodic) {
        double fl = std::floor(r);
        lagrange4(r - fl, s.w);
        s.base = static_cast<int>(fl) - 1;
        return s;
    }
    // non-periodic: allow a half-cell extrapolation margin
    const double margin = 0.5;
    if (r < -margin || r > (wrap == Wrap::polar ? n - 1 + n * 0.5 : n - 1 + margin)) {
        *ok = false;
        s.base = 0; lagrange4(0.0, s.w);
        return s;
    }
    double fl = std::floor(r);
    int b = static_cast<int>(fl) - 1;
    double t = r - fl;
    if (wrap == Wrap::shift) {
        if (b < 0) { t += b; b = 0; }
        if (b > n - 4) { t += b - (n - 4); b = n - 4; }
    } else { // polar: clamp only the low side; high side handled by ghost fetch
        if (b < 0) { t += b; b = 0; }
    }
    lagrange4(t, s.w);
    s.base = b;
    return s;
}

} // namespace

std::vector<double> interp_bicubic(const Field& f, const std::vector<Vec2>& pts,
                                   Wrap wrap1, Wrap wrap2) {
    const Grid& g = f.grid();
    const int n1 = g.n1, n2 = g.n2, comps = f.comps();
    if (wrap2 == Wrap::polar && n1 % 2 != 0)
        throw Error("interp: polar wrap requires even n1");
    std::vector<double> out(pts.size() * comps, 0.0);
    std::string bad;
    int nbad = 0;

    for (size_t p = 0; p < pts.size(); ++p) {
        bool ok1 = true, ok2 = true;
        AxisStencil s1 = axis_stencil(pts[p].x, g.h1, n1, wrap1, &ok1);
        AxisStencil s2 = axis_stencil(pts[p].y, g.h2, n2, wrap2, &ok2);
        if (!ok1 || !ok2) {
            if (nbad < 8) {
                char buf[96];
                std::snprintf(buf, sizeof buf, " (%g,%g)", pts[p].x, pts[p].y);
                bad += buf;
            }
            ++nbad;
            continue;
        }
        for (int c = 0; c < comps; ++c) {
            const double* d = f.comp(c);
            double acc = 0.0;
            for (int b = 0; b < 4; ++b) {
                int j = s2.base + b;
                int ishift = 0;
                if (wrap2 == Wrap::polar && j > n2 - 1) {
                    j = 2 * n2 - 1 - j; // reflect across the pole
                    ishift = n1 / 2;
                }
                double row = 0.0;
                for (int a = 0; a < 4; ++a) {
                    int i = s1.base + a + ishift;
                    if (wrap1 == Wrap::periodic) i = ((i % n1) + n1) % n1;
                    row += s1.w[a] * d[g.idx(i, j)];
                }
                acc += s2.w[b] * row;
            }
            out[p * comps + c] = acc;
        }
    }
    if (nbad > 0)
        throw Error("interp: " + std::to_string(nbad) +
                    " target point(s) outside domain hull:" + bad);
    return out;
}

double interp_bicubic_one(const Field& f, int c, double u, double v,
                          Wrap wrap1, Wrap wrap2) {
    Field tmp(f.grid(), 1);
    // cheap path: reuse the vector routine on a single point and component
    // (avoided in hot loops; smoothing batches points).
    std::vector<Vec2> pt = {Vec2{u, v}};
    // Build a scalar view of component c.
    for (int n = 0; n < f.size(); ++n) tmp.atn(0, n) = f.atn(c, n);
    return interp_bicubic(tmp, pt, wrap1, wrap2)[0];
}

} // namespace euler2d
