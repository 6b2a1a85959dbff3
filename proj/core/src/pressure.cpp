#include "euler2d/pressure.hpp"

#include <cmath>

namespace euler2d {

ReferenceBoundary reference_boundary(const Domain& d) {
    ReferenceBoundary rb;
    rb.curve0.resize(d.nb());
    const int j = d.boundary_j();
    for (int i = 0; i < d.nb(); ++i) rb.curve0[i] = d.map_node(i, j);
    BoundaryGeometry bg = boundary_geometry(rb.curve0, d.bh(), d.spectral1(),
                                            d.mode == DomainMode::disk
                                                ? CurveOrientation::ccw_outward
                                                : CurveOrientation::graph_up);
    rb.g0 = bg.g;
    rb.sqrtg0 = bg.sqrtg;
    rb.H0 = bg.H;
    return rb;
}

PressureSolver::PressureSolver(const Domain& d, const ReferenceBoundary& rb)
    : dom_(&d), rb_(&rb),
      dirichlet_(d, BCType::dirichlet, BCType::neumann),
      neumann_(d, BCType::neumann, BCType::neumann) {}

Field PressureSolver::interior_rhs(const Field& v, const Field& v_kappa,
                                   const PullbackCache& cache) const {
    const Domain& d = *dom_;
    // grad u o X = dref(v) (ref grad eta_k)^{-1}, likewise for u_kappa
    Field dv1 = dref1(d, v), dv2 = dref2(d, v);
    Field dk1 = dref1(d, v_kappa), dk2 = dref2(d, v_kappa);
    Field f(d.grid, 1);
    for (int j = 0; j < d.grid.n2; ++j)
        for (int i = 0; i < d.grid.n1; ++i) {
            const Mat2 RG = cache.ref_grad_eta_k.mat(i, j);
            const double JX = RG.det();
            const Mat2 RGi = RG.inverse();
            Mat2 Du, Dk;
            Du.m[0][0] = dv1.at(0, i, j); Du.m[0][1] = dv2.at(0, i, j);
            Du.m[1][0] = dv1.at(1, i, j); Du.m[1][1] = dv2.at(1, i, j);
            Dk.m[0][0] = dk1.at(0, i, j); Dk.m[0][1] = dk2.at(0, i, j);
            Dk.m[1][0] = dk1.at(1, i, j); Dk.m[1][1] = dk2.at(1, i, j);
            const Mat2 Gu = Du.mul(RGi);  // grad u at X(node)
            const Mat2 Gk = Dk.mul(RGi);  // grad u_kappa
            // Tr(grad u_k . grad u) = (u_k)^i,_j u^j,_i
            const double tr = Gk.m[0][0] * Gu.m[0][0] + Gk.m[0][1] * Gu.m[1][0] +
                              Gk.m[1][0] * Gu.m[0][1] + Gk.m[1][1] * Gu.m[1][1];
            f.at(0, i, j) = -JX * tr;
        }
    return f;
}

std::vector<double> PressureSolver::dirichlet_data(const Field& eta, const Field& v,
                                                   const PullbackCache& cache, double sigma,
                                                   double kappa) const {
    const Domain& d = *dom_;
    const int nb = d.nb();
    std::vector<double> data(nb, 0.0);
    if (sigma == 0.0 && kappa == 0.0) return data;

    // current interface geometry (of eta) and smoothed normals (of eta_k)
    std::vector<double> row = d.boundary_row(eta);
    std::vector<Vec2> curve(nb);
    for (int i = 0; i < nb; ++i) curve[i] = {row[i], row[nb + i]};
    const CurveOrientation orient = d.mode == DomainMode::disk ? CurveOrientation::ccw_outward
                                                               : CurveOrientation::graph_up;
    BoundaryGeometry bg = boundary_geometry(curve, d.bh(), d.spectral1(), orient);

    if (sigma != 0.0) {
        for (int i = 0; i < nb; ++i)
            data[i] -= sigma * bg.curvature_vec[i].dot(cache.bg_k.normal[i]) / cache.bg_k.sqrtg[i];
    }
    if (kappa != 0.0) {
        std::vector<double> vn(nb);
        std::vector<double> vrow = d.boundary_row(v);
        for (int i = 0; i < nb; ++i)
            vn[i] = Vec2{vrow[i], vrow[nb + i]}.dot(cache.bg_k.normal[i]);
        std::vector<double> lb = laplace_beltrami0(vn, rb_->g0, cache.bg_k.g, d.bh(), d.spectral1());
        for (int i = 0; i < nb; ++i) data[i] -= kappa * lb[i];
    }
    return data;
}

Field PressureSolver::solve_dirichlet(const Field& eta, const Field& v, const Field& v_kappa,
                                      const PullbackCache& cache, double sigma, double kappa,
                                      PressureStats* stats) {
    dirichlet_.set_flow_coefficient(flow_coefficient(*dom_, cache));
    Field f = interior_rhs(v, v_kappa, cache);
    std::vector<double> data = dirichlet_data(eta, v, cache, sigma, kappa);
    std::vector<double> zero(dom_->nb(), 0.0);
    EllipticStats es;
    Field q = dirichlet_.solve(f, data, zero, &es);
    if (es.rel_residual > 1e-10)
        throw SolverError("pressure: Dirichlet solve residual " + std::to_string(es.rel_residual));
    if (stats) {
        stats->rel_residual = es.rel_residual;
        stats->iterations = es.iterations;
        stats->refactorized = es.refactorized;
    }
    q.validate();
    return q;
}

Field PressureSolver::solve_neumann(const Field& v, const Field& v_kappa, const Field& v_t,
                                    const PullbackCache& cache, double boundary_mean_target,
                                    PressureStats* stats) {
    const Domain& d = *dom_;
    neumann_.set_flow_coefficient(flow_coefficient(d, cache));
    // f0 = Tr(d_t a_k grad v) with d_t Cof grad eta_k = Cof grad v_k (2D
    // linearity of the cofactor); reference form multiplies by J_Theta.
    Field gv = jacobian(d, v);
    Field gk = jacobian(d, v_kappa);
    Field f(d.grid, 1);
    for (int j = 0; j < d.grid.n2; ++j)
        for (int i = 0; i < d.grid.n1; ++i) {
            const double f0 = gk.mat(i, j).cof().frob(gv.mat(i, j));
            f.at(0, i, j) = f0 * d.map_det(d.grid.x1(i), d.grid.x2(j));
        }
    // surface flux density g0 = -(v_t . n_k) sqrt(g_k), s-parametrized
    const int nb = d.nb();
    std::vector<double> flux(nb);
    std::vector<double> vt_row = d.boundary_row(v_t);
    for (int i = 0; i < nb; ++i)
        flux[i] = -Vec2{vt_row[i], vt_row[nb + i]}.dot(cache.bg_k.normal[i]) * cache.bg_k.sqrtg[i];
    std::vector<double> zero(nb, 0.0);
    const double defect = neumann_.make_compatible(f, flux, zero);
    EllipticStats es;
    Field q = neumann_.solve(f, flux, zero, &es);
    if (es.rel_residual > 1e-9)
        throw SolverError("pressure: Neumann solve residual " + std::to_string(es.rel_residual));
    const double shift = boundary_mean_target - boundary_mean(d, *rb_, q);
    for (int n = 0; n < q.size(); ++n) q.atn(0, n) += shift;
    if (stats) {
        stats->rel_residual = es.rel_residual;
        stats->iterations = es.iterations;
        stats->compat_defect = defect;
    }
    q.validate();
    return q;
}

Field penalized_pressure(const Domain& d, const PullbackCache& cache, const Field& w, double eps) {
    if (eps <= 0.0) throw Error("penalized_pressure: eps must be positive");
    Field tr = trace_a_grad(d, cache, w);
    Field q(d.grid, 1);
    for (int n = 0; n < q.size(); ++n) q.atn(0, n) = -tr.atn(0, n) / eps;
    return q;
}

Field momentum_rhs(const Domain& d, const PullbackCache& cache, const Field& q) {
    Field gq = grad(d, q);
    Field out(d.grid, 2);
    for (int j = 0; j < d.grid.n2; ++j)
        for (int i = 0; i < d.grid.n1; ++i)
            out.set_vec(i, j, -1.0 * cache.b_k.mat(i, j).applyT(gq.vec(i, j)));
    return out;
}

double boundary_mean(const Domain& d, const ReferenceBoundary& rb, const Field& q) {
    std::vector<double> row = d.boundary_row(q);
    std::vector<double> trace(row.begin(), row.begin() + d.nb());
    const double num = boundary_integral(trace, rb.sqrtg0, d.bh());
    std::vector<double> one(d.nb(), 1.0);
    const double den = boundary_integral(one, rb.sqrtg0, d.bh());
    return num / den;
}

} // namespace euler2d
