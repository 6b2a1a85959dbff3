#ifndef EULER2D_PRESSURE_HPP
#define EULER2D_PRESSURE_HPP

#include "euler2d/elliptic.hpp"

namespace euler2d {

struct PressureStats {
    double rel_residual = 0.0;
    int iterations = 0;
    bool refactorized = false;
    double compat_defect = 0.0;
    double cross_gap = -1.0; // Dirichlet/Neumann L2 gap when evaluated
};

/// Reference geometry shared by all pressure solves of a run: the metric of
/// the initial boundary configuration (parametrized by the boundary
/// parameter s), entering Delta_0.
struct ReferenceBoundary {
    std::vector<double> g0, sqrtg0;
    std::vector<double> H0; // reference signed curvature
    std::vector<Vec2> curve0;
};
ReferenceBoundary reference_boundary(const Domain& d);

/// Pressure solvers in Lagrangian coordinates.
///
/// solve_dirichlet: interior equation L q = -J_X Tr(grad u_k grad u) o X with
/// trace q = -sigma (cv(eta).n_k)/sqrt(g_k) - kappa Delta_0(v.n_k) (sigma>0)
/// or q = 0 (sigma=0); strip bottom is homogeneous Neumann.
/// solve_neumann: conormal data -v_t . n_k sqrt(g_k), source Tr(da_k/dt grad v),
/// compatibility restored by a uniform source shift, mean pinned to the
/// Dirichlet boundary mean.
class PressureSolver {
  public:
    PressureSolver(const Domain& d, const ReferenceBoundary& rb);

    Field solve_dirichlet(const Field& eta, const Field& v, const Field& v_kappa,
                          const PullbackCache& cache, double sigma, double kappa,
                          PressureStats* stats = nullptr);

    /// v_t: material acceleration used for the Neumann data (typically
    /// -b_k^T grad q from a Dirichlet solve or the previous accepted step).
    Field solve_neumann(const Field& v, const Field& v_kappa, const Field& v_t,
                        const PullbackCache& cache, double boundary_mean_target,
                        PressureStats* stats = nullptr);

    /// Dirichlet boundary data of the sigma>0 condition (per surface node).
    std::vector<double> dirichlet_data(const Field& eta, const Field& v,
                                       const PullbackCache& cache, double sigma,
                                       double kappa) const;

    const ReferenceBoundary& reference() const { return *rb_; }

  private:
    const Domain* dom_;
    const ReferenceBoundary* rb_;
    EllipticSolver dirichlet_, neumann_;
    Field interior_rhs(const Field& v, const Field& v_kappa, const PullbackCache& cache) const;
};

/// Penalized pressure q_eps = -(1/eps) Tr(a_kappa grad w); pointwise, no solve.
Field penalized_pressure(const Domain& d, const PullbackCache& cache, const Field& w, double eps);

/// Material acceleration -b_k^T grad_Omega q.
Field momentum_rhs(const Domain& d, const PullbackCache& cache, const Field& q);

/// Boundary mean (ds0-weighted) of a field's surface trace.
double boundary_mean(const Domain& d, const ReferenceBoundary& rb, const Field& q);

} // namespace euler2d

#endif
