#include "euler2d/boundary_geometry.hpp"

#include "euler2d/errors.hpp"
#include "euler2d/fft.hpp"

#include <cmath>

namespace euler2d {

std::vector<double> boundary_deriv(const std::vector<double>& f, double h, bool spectral) {
    const int n = static_cast<int>(f.size());
    if (spectral && is_pow2(n)) {
        auto d = spectral_derivative(f, 1);
        for (double& v : d) v /= h * n; // parameter length h*n (spectral assumes [0,1))
        return d;
    }
    std::vector<double> out(n);
    const double s = 1.0 / (12.0 * h);
    for (int i = 0; i < n; ++i) {
        const int im2 = (i - 2 + n) % n, im1 = (i - 1 + n) % n;
        const int ip1 = (i + 1) % n, ip2 = (i + 2) % n;
        out[i] = s * (f[im2] - 8.0 * f[im1] + 8.0 * f[ip1] - f[ip2]);
    }
    return out;
}

namespace {
std::vector<Vec2> curve_deriv(const std::vector<Vec2>& c, double h, bool spectral) {
    const int n = static_cast<int>(c.size());
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) { x[i] = c[i].x; y[i] = c[i].y; }
    auto dx = boundary_deriv(x, h, spectral);
    auto dy = boundary_deriv(y, h, spectral);
    std::vector<Vec2> out(n);
    for (int i = 0; i < n; ++i) out[i] = {dx[i], dy[i]};
    return out;
}
} // namespace

void induced_metric(const std::vector<Vec2>& eta, double h, bool spectral,
                    std::vector<double>& g, std::vector<double>& sqrtg) {
    auto d1 = curve_deriv(eta, h, spectral);
    const int n = static_cast<int>(eta.size());
    g.resize(n); sqrtg.resize(n);
    for (int i = 0; i < n; ++i) {
        g[i] = d1[i].dot(d1[i]);
        sqrtg[i] = std::sqrt(g[i]);
        if (sqrtg[i] < 1e-10) throw GeometryError("degenerate boundary parametrization (sqrt g < 1e-10)");
    }
}

BoundaryGeometry boundary_geometry(const std::vector<Vec2>& eta, double h, bool spectral,
                                   CurveOrientation orient) {
    const int n = static_cast<int>(eta.size());
    BoundaryGeometry bg;
    auto d1 = curve_deriv(eta, h, spectral);
    auto d2 = curve_deriv(d1, h, spectral);
    bg.g.resize(n); bg.sqrtg.resize(n);
    bg.tangent.resize(n); bg.normal.resize(n);
    bg.curvature_vec.resize(n); bg.H.resize(n);
    for (int i = 0; i < n; ++i) {
        bg.g[i] = d1[i].dot(d1[i]);
        bg.sqrtg[i] = std::sqrt(bg.g[i]);
        if (bg.sqrtg[i] < 1e-10)
            throw GeometryError("degenerate boundary parametrization (sqrt g < 1e-10)");
        const Vec2 t = d1[i] * (1.0 / bg.sqrtg[i]);
        bg.tangent[i] = t;
        bg.normal[i] = (orient == CurveOrientation::ccw_outward) ? Vec2{t.y, -t.x} : Vec2{-t.y, t.x};
        // Pi eta_ss / sqrt(g), Pi = I - t (x) t
        const Vec2 w = d2[i];
        const Vec2 piw = w - t * w.dot(t);
        bg.curvature_vec[i] = piw * (1.0 / bg.sqrtg[i]);
        bg.H[i] = -bg.normal[i].dot(bg.curvature_vec[i]) / bg.sqrtg[i];
    }
    return bg;
}

std::vector<double> laplace_beltrami0(const std::vector<double>& f,
                                      const std::vector<double>& g0,
                                      const std::vector<double>& gk,
                                      double h, bool spectral) {
    const int n = static_cast<int>(f.size());
    for (int i = 0; i < n; ++i)
        if (!(g0[i] > 1e-20) || !(gk[i] > 1e-20))
            throw GeometryError("laplace_beltrami0: degenerate metric");
    auto df = boundary_deriv(f, h, spectral);
    std::vector<double> flux(n);
    for (int i = 0; i < n; ++i) flux[i] = df[i] / std::sqrt(g0[i]); // sqrt(g0) g0^{-1} = 1/sqrt(g0)
    auto dflux = boundary_deriv(flux, h, spectral);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = dflux[i] / std::sqrt(gk[i]);
    return out;
}

std::vector<double> height_curvature(const std::vector<double>& hs,
                                     const std::vector<Vec2>& reference_curve,
                                     double h, bool spectral,
                                     CurveOrientation orient, double eps) {
    const int n = static_cast<int>(hs.size());
    for (double v : hs)
        if (std::abs(v) >= eps)
            throw GeometryError("height_curvature: |h| exceeds the tubular half-width");
    BoundaryGeometry ref = boundary_geometry(reference_curve, h, spectral, orient);
    // arclength derivatives of h and of the reference curvature
    auto dh = boundary_deriv(hs, h, spectral);
    auto ddh = boundary_deriv(dh, h, spectral);
    auto dH0 = boundary_deriv(ref.H, h, spectral);
    // d/dsigma = (1/sqrt g) d/ds; second arclength derivative:
    // h'' = (1/sqrt g) d/ds (h,_s / sqrt g)
    std::vector<double> hp(n), hpp(n), H0p(n);
    std::vector<double> tmp(n);
    for (int i = 0; i < n; ++i) tmp[i] = dh[i] / ref.sqrtg[i];
    auto dtmp = boundary_deriv(tmp, h, spectral);
    for (int i = 0; i < n; ++i) {
        hp[i] = dh[i] / ref.sqrtg[i];
        hpp[i] = dtmp[i] / ref.sqrtg[i];
        H0p[i] = dH0[i] / ref.sqrtg[i];
        (void)ddh;
    }
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const double A = 1.0 + hs[i] * ref.H[i];
        const double D = A * A + hp[i] * hp[i];
        out[i] = (ref.H[i] * A * A + 2.0 * ref.H[i] * hp[i] * hp[i] +
                  hs[i] * hp[i] * H0p[i] - A * hpp[i]) / std::pow(D, 1.5);
    }
    return out;
}

double boundary_integral(const std::vector<double>& f, const std::vector<double>& sqrtg, double h) {
    double s = 0.0;
    for (size_t i = 0; i < f.size(); ++i) s += f[i] * sqrtg[i] * h;
    return s;
}

} // namespace euler2d
