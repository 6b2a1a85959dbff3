#ifndef EULER2D_ELLIPTIC_HPP
#define EULER2D_ELLIPTIC_HPP

#include "euler2d/pullback.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>

#include <memory>
#include <optional>
#include <vector>

namespace euler2d {

enum class BCType { dirichlet, neumann };

struct EllipticStats {
    double rel_residual = 0.0;
    int iterations = 0;
    bool refactorized = false;
    double compat_defect = 0.0;
};

/// Variable-coefficient elliptic operator L q = d_j ( K^{jl} d_l q ) on the
/// reference square, K = J_X^{-1} Cof(grad_ref X)^T Cof(grad_ref X) for the
/// composite map X = eta_kappa o Theta.
///
/// The assembly factors K through the domain map: K = J_T^{-1} Cof(T)^T P
/// Cof(T) with P = J^{-1} Cof^T Cof of the *flow* gradient (P = I at eta=Id),
/// so face coefficients use the analytic map part (the polar pole face
/// coefficient vanishes exactly) and the averaged nodal flow part.
///
/// disk: symmetric sparse assembly (flux form + centered cross terms),
///       direct sparse Cholesky kept as a preconditioner across solves.
/// strip: spectral in x1. A = A_flat + dA with A_flat the exact
///       constant-coefficient operator (per-Fourier-mode tridiagonal) and dA
///       the flux-form assembly of the coefficient deviation; solved by PCG
///       preconditioned with the flat factorization.
class EllipticSolver {
  public:
    EllipticSolver(const Domain& d, BCType surface, BCType bottom = BCType::neumann);

    /// Refresh coefficients from the nodal flow part P (matrix field, = I for
    /// the identity flow).  Assembles the matrix/deviation.
    void set_flow_coefficient(const Field& P);
    void set_identity_coefficient();

    /// Solve a(q, phi) = -(f, phi) + <surface_flux, phi> + <bottom_flux, phi>
    /// where f is the reference-form source (J_X times the Eulerian source),
    /// surface_data is Dirichlet trace or Neumann flux density (in the
    /// boundary parameter measure) per surface node, bottom likewise (strip).
    /// Pure-Neumann systems must be fed compatible data (see
    /// make_compatible); the returned solution has zero weighted mean.
    Field solve(const Field& f, const std::vector<double>& surface_data,
                const std::vector<double>& bottom_data, EllipticStats* stats = nullptr);

    /// Uniformly adjusts f (reference form) so the pure-Neumann
    /// compatibility integral vanishes; returns the defect before adjustment.
    double make_compatible(Field& f, const std::vector<double>& surface_flux,
                           const std::vector<double>& bottom_flux) const;

    /// Dense application of the assembled bilinear form on free nodes
    /// (testing: symmetry / stencil checks).
    std::vector<double> apply_form(const std::vector<double>& q_free) const;
    int n_free() const { return nfree_; }
    /// Node quadrature weight of the reference-form RHS inner product.
    double node_weight(int i, int j) const;

    bool pure_neumann() const;

  private:
    const Domain* dom_;
    BCType surface_, bottom_;
    int n1_, n2_, N_, nfree_;
    std::vector<int> free_index_;   // node -> free index or -1 (Dirichlet row)
    std::vector<int> free_nodes_;   // free index -> node

    Eigen::SparseMatrix<double> A_;         // disk: full a-form; strip: deviation dA
    std::vector<Eigen::Triplet<double>> coupling_; // (free row, dirichlet node, value)
    std::unique_ptr<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>> factor_;
    Eigen::SparseMatrix<double> A_fact_;    // matrix the factorization belongs to
    bool have_factor_ = false;

    // strip flat-mode machinery
    struct ModeSolver {
        std::vector<double> diag, lower; // tridiagonal Cholesky (LDL^T) factors
        std::vector<double> a_diag, a_off;
        void factor();
        void solve(std::vector<double>& x) const;
        void apply(const std::vector<double>& x, std::vector<double>& y) const;
    };
    std::vector<ModeSolver> modes_; // per k1 bin, on free rows
    std::vector<int> free_rows_;    // strip: rows that are unknowns
    std::vector<double> roww_;      // trapezoid row weights (all rows)

    void assemble_disk(const Field& P);
    void assemble_strip(const Field& P);
    void build_strip_modes();
    std::vector<double> strip_flat_apply(const std::vector<double>& q_free) const;
    Field solve_disk(const Field& f, const std::vector<double>& surface_data,
                     EllipticStats* stats);
    Field solve_strip(const Field& f, const std::vector<double>& surface_data,
                      const std::vector<double>& bottom_data, EllipticStats* stats);

    Mat2 flow_P_node(int i, int j) const;
    Field Pfield_;
    bool assembled_ = false;
};

/// Nodal flow coefficient P = J^{-1} Cof^T Cof of the physical flow gradient.
Field flow_coefficient(const Domain& d, const PullbackCache& c);

} // namespace euler2d

#endif
