#ifndef EULER2D_SMOOTHING_HPP
#define EULER2D_SMOOTHING_HPP

#include "euler2d/atlas.hpp"
#include "euler2d/mollifier.hpp"

#include <vector>

namespace euler2d {

/// Horizontal convolution by layers: smooths every component of w along x1
/// only, row by row.  Periodic grids wrap; non-periodic (chart) grids require
/// supp(w) to keep horizontal distance >= delta from the lateral edges and
/// raise a precondition error naming the chart otherwise.  Commutes with
/// restriction to any row by construction.
Field horizontal_convolve(const Field& w, double delta, const Mollifier& m);

/// Commutator rho_k * [f g] - f (rho_k * g) together with its L2 and
/// discrete-H^{1/2} norms over the reference square.
struct CommutatorResult {
    Field field;
    double l2 = 0.0;
    double h_half = 0.0;
};
CommutatorResult commutator(const Field& f, const Field& g, double kappa, const Mollifier& m);

/// The smoothed-velocity operator of the kappa-problem:
///   v_k = sum_{l<K} sqrt(a_l) [rho*rho*((sqrt(a_l) v) o theta_l)] o theta_l^{-1}
///         + sum_{l>=K} a_l v.
/// Geometry-dependent tables are precomputed once; apply() is pure.
class SmoothingOperator {
  public:
    SmoothingOperator(const Domain& d, const ChartAtlas& atlas, Mollifier m, double kappa);

    Field apply(const Field& v) const;
    double kappa() const { return kappa_; }

    /// Single-convolution chart pullback rho * ((sqrt(a_l) v) o theta_l) on
    /// chart l's grid (the velocity whose time integral is eta_{l kappa}).
    Field chart_pullback_smoothed(const Field& v, int l) const;

    const ChartAtlas& atlas() const { return *atlas_; }

  private:
    const Domain* dom_;
    const ChartAtlas* atlas_;
    Mollifier moll_;
    double kappa_;
    // per boundary chart: reference coords of chart nodes in the global grid,
    // sqrt(alpha) at chart nodes, and scatter-back data per global node
    struct ChartTables {
        std::vector<Vec2> chart_node_ref;    // global-grid reference coords of chart nodes
        std::vector<double> sqrt_alpha_node; // at chart nodes
        std::vector<int> touched;            // global node indices with alpha_l > 0
        std::vector<Vec2> touched_chart_xy;  // chart coordinates of touched nodes
        std::vector<double> touched_sqrt_alpha;
    };
    std::vector<ChartTables> tables_;
    std::vector<double> interior_weight_; // per global node: sum of interior alphas
};

/// Discrete boundary smoothing operator on an n-node periodic boundary in
/// strip geometry (alpha == 1): the circulant double-convolution matrix.
/// Symmetric PSD in unweighted discrete L2.
std::vector<std::vector<double>> strip_boundary_smoothing_matrix(int n, double kappa,
                                                                 const Mollifier& m);

/// Gram realization of the boundary operator's quadratic form on an n-node
/// disk boundary: G = sum_l B_l^T W B_l with B_l = C M_{sqrt alpha_l} E_l
/// (single convolution each side).  Symmetric PSD by construction.
std::vector<std::vector<double>> disk_boundary_smoothing_gram(const Domain& d,
                                                              const ChartAtlas& atlas,
                                                              int n, double kappa,
                                                              const Mollifier& m);

} // namespace euler2d

#endif
