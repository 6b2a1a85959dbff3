#include "euler2d/pullback.hpp"

#include <cmath>
#include <cstdio>

namespace euler2d {

namespace {
void invert_all(const Domain& d, const Field& grad, Field* inv, Field* cof, Field* det,
                double floor_det, const char* what) {
    const Grid& g = d.grid;
    for (int j = 0; j < g.n2; ++j)
        for (int i = 0; i < g.n1; ++i) {
            const Mat2 F = grad.mat(i, j);
            const double dv = F.det();
            if (dv < floor_det) {
                char buf[128];
                std::snprintf(buf, sizeof buf, "det grad %s = %.3e at node (%d,%d)", what, dv, i, j);
                throw WindowBreach(buf);
            }
            det->at(0, i, j) = dv;
            cof->set_mat(i, j, F.cof());
            inv->set_mat(i, j, F.inverse());
        }
}

double max_dev_from_identity(const Field& grad) {
    double m = 0.0;
    const Grid& g = grad.grid();
    for (int j = 0; j < g.n2; ++j)
        for (int i = 0; i < g.n1; ++i) {
            Mat2 F = grad.mat(i, j);
            F.m[0][0] -= 1.0; F.m[1][1] -= 1.0;
            m = std::max(m, F.max_abs());
        }
    return m;
}
} // namespace

PullbackCache pullback_cache(const Domain& d, const Field& eta, const Field& eta_k,
                             const WindowParams& wp, bool enforce_window) {
    PullbackCache c{
        jacobian(d, eta), Field(d.grid, 4), Field(d.grid, 4), Field(d.grid, 1),
        jacobian(d, eta_k), Field(d.grid, 4), Field(d.grid, 4), Field(d.grid, 1),
        Field(d.grid, 4), BoundaryGeometry{}, 0.0, 0.0, 0.0};

    invert_all(d, c.grad_eta, &c.a, &c.cof, &c.J, wp.J_floor, "eta");
    invert_all(d, c.grad_eta_k, &c.b_k, &c.cof_k, &c.J_k, 0.0, "eta_kappa");

    // composite reference-square gradient of the eta_kappa samples
    Field d1 = dref1(d, eta_k), d2 = dref2(d, eta_k);
    for (int j = 0; j < d.grid.n2; ++j)
        for (int i = 0; i < d.grid.n1; ++i) {
            Mat2 G;
            G.m[0][0] = d1.at(0, i, j); G.m[0][1] = d2.at(0, i, j);
            G.m[1][0] = d1.at(1, i, j); G.m[1][1] = d2.at(1, i, j);
            c.ref_grad_eta_k.set_mat(i, j, G);
        }

    c.max_grad_dev = max_dev_from_identity(c.grad_eta);
    c.Jk_min = 1e300; c.Jk_max = -1e300;
    for (int n = 0; n < c.J_k.size(); ++n) {
        c.Jk_min = std::min(c.Jk_min, c.J_k.atn(0, n));
        c.Jk_max = std::max(c.Jk_max, c.J_k.atn(0, n));
    }
    if (enforce_window) {
        if (c.Jk_min < wp.Jk_lo || c.Jk_max > wp.Jk_hi) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "J_kappa in [%.4f, %.4f] outside [%.2f, %.2f]",
                          c.Jk_min, c.Jk_max, wp.Jk_lo, wp.Jk_hi);
            throw WindowBreach(buf);
        }
        const double devk = max_dev_from_identity(c.grad_eta_k);
        if (c.max_grad_dev > wp.eps0 || devk > wp.eps0) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "||grad eta - Id||_inf = %.4f (smoothed %.4f) > eps0 = %.3f",
                          c.max_grad_dev, devk, wp.eps0);
            throw WindowBreach(buf);
        }
    }

    // boundary geometry of the smoothed trace
    std::vector<double> row = d.boundary_row(eta_k);
    std::vector<Vec2> curve(d.nb());
    for (int i = 0; i < d.nb(); ++i) curve[i] = {row[i], row[d.nb() + i]};
    c.bg_k = boundary_geometry(curve, d.bh(), d.spectral1(),
                               d.mode == DomainMode::disk ? CurveOrientation::ccw_outward
                                                          : CurveOrientation::graph_up);
    return c;
}

Field trace_a_grad(const Domain& d, const PullbackCache& c, const Field& w) {
    Field gw = jacobian(d, w);
    Field out(d.grid, 1);
    for (int j = 0; j < d.grid.n2; ++j)
        for (int i = 0; i < d.grid.n1; ++i)
            out.at(0, i, j) = c.cof_k.mat(i, j).frob(gw.mat(i, j));
    return out;
}

Field piola_residual(const Domain& d, const Field& eta) {
    Field ge = jacobian(d, eta);
    Field cof(d.grid, 4);
    for (int j = 0; j < d.grid.n2; ++j)
        for (int i = 0; i < d.grid.n1; ++i) cof.set_mat(i, j, ge.mat(i, j).cof());
    // rows of the cofactor matrix as vector fields
    Field out(d.grid, 2);
    for (int r = 0; r < 2; ++r) {
        Field rowf(d.grid, 2);
        for (int n = 0; n < rowf.size(); ++n) {
            rowf.atn(0, n) = cof.atn(r * 2 + 0, n);
            rowf.atn(1, n) = cof.atn(r * 2 + 1, n);
        }
        Field dv = divergence(d, rowf);
        for (int n = 0; n < out.size(); ++n) out.atn(r, n) = dv.atn(0, n);
    }
    return out;
}

} // namespace euler2d
