#ifndef EULER2D_BOUNDARY_GEOMETRY_HPP
#define EULER2D_BOUNDARY_GEOMETRY_HPP

#include "euler2d/field.hpp"

#include <vector>

namespace euler2d {

/// Periodic derivative of uniformly sampled data (parameter spacing h):
/// 4th-order centered stencil, or spectral when `spectral` (power-of-two n).
std::vector<double> boundary_deriv(const std::vector<double>& f, double h, bool spectral);

enum class CurveOrientation {
    ccw_outward, ///< CCW curve, outward normal = rotate tangent by -90 deg (disk)
    graph_up     ///< x-increasing graph, outward normal = rotate tangent by +90 deg (strip)
};

/// Pointwise induced boundary geometry of a sampled closed (periodic) curve.
struct BoundaryGeometry {
    std::vector<double> g, sqrtg;   // metric g_11 wrt the curve parameter
    std::vector<Vec2> tangent;      // unit
    std::vector<Vec2> normal;       // unit outward
    std::vector<Vec2> curvature_vec; // sqrt(g) Delta_g eta = Pi eta_ss / sqrt(g)
    std::vector<double> H;          // signed curvature, -n . curvature_vec / sqrt(g)
};

/// Builds metric, frame, projection and curvature samples.  Flags a
/// degenerate parametrization when sqrt(g) < 1e-10.
BoundaryGeometry boundary_geometry(const std::vector<Vec2>& eta, double h, bool spectral,
                                   CurveOrientation orient);

/// Metric only (g, sqrt g).
void induced_metric(const std::vector<Vec2>& eta, double h, bool spectral,
                    std::vector<double>& g, std::vector<double>& sqrtg);

/// Boundary Laplacian Delta_0 f = sqrt(g_k)^{-1} d/ds [ sqrt(g0) g0^{-1} df/ds ].
/// Exactly self-adjoint in the sqrt(g_k)-weighted discrete inner product.
std::vector<double> laplace_beltrami0(const std::vector<double>& f,
                                      const std::vector<double>& g0,
                                      const std::vector<double>& gk,
                                      double h, bool spectral);

/// Curvature of the normal graph {c(s) + h(s) N(s)} over a reference curve,
/// evaluated at the reference parameter.  Uses the closed-form expression in
/// the reference metric, normal and signed curvature; rejects |h| >= eps
/// (tubular neighborhood half-width).
std::vector<double> height_curvature(const std::vector<double>& h_samples,
                                     const std::vector<Vec2>& reference_curve,
                                     double h, bool spectral,
                                     CurveOrientation orient, double eps);

/// Boundary quadrature: integral over the curve of f ds0 (reference metric).
double boundary_integral(const std::vector<double>& f, const std::vector<double>& sqrtg, double h);

} // namespace euler2d

#endif
