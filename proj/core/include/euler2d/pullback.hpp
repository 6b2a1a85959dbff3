#ifndef EULER2D_PULLBACK_HPP
#define EULER2D_PULLBACK_HPP

#include "euler2d/boundary_geometry.hpp"
#include "euler2d/calculus.hpp"

namespace euler2d {

struct WindowParams {
    double eps0 = 0.25;        // ||grad eta - I||_inf tolerance
    double Jk_lo = 0.5;        // J_kappa window
    double Jk_hi = 1.5;
    double J_floor = 0.05;     // det grad eta bounded away from zero
};

/// Pull-back data of the flow map and its smoothed companion.
///
/// grad_* are physical gradients on Omega; a = (grad eta)^{-1}; cof_* are
/// cofactor matrices (paper convention a_kappa = Cof grad eta_kappa);
/// ref_grad_eta_k is the reference-square gradient of the eta_kappa samples
/// (the composite-map Jacobian the elliptic solver consumes).
struct PullbackCache {
    Field grad_eta;   // matrix
    Field a;          // matrix, (grad eta)^{-1}
    Field cof;        // matrix, Cof(grad eta)
    Field J;          // scalar, det grad eta
    Field grad_eta_k; // matrix
    Field b_k;        // matrix, (grad eta_k)^{-1}
    Field cof_k;      // matrix
    Field J_k;        // scalar
    Field ref_grad_eta_k; // matrix
    BoundaryGeometry bg_k; // boundary geometry of the eta_kappa trace
    double max_grad_dev = 0.0; // ||grad eta - I||_inf
    double Jk_min = 0.0, Jk_max = 0.0;
};

/// Builds the cache; raises WindowBreach when J_kappa leaves [Jk_lo, Jk_hi]
/// or ||grad eta - Id||_inf exceeds eps0 (checked for eta and eta_kappa).
PullbackCache pullback_cache(const Domain& d, const Field& eta, const Field& eta_k,
                             const WindowParams& wp = {}, bool enforce_window = true);

/// Tr(a_kappa grad w) = <Cof grad eta_kappa, grad w>_F pointwise; the
/// Lagrangian divergence constraint residual field.
Field trace_a_grad(const Domain& d, const PullbackCache& c, const Field& w);

/// Discrete Piola residual: divergence of each cofactor row of Cof(grad eta).
Field piola_residual(const Domain& d, const Field& eta);

} // namespace euler2d

#endif
