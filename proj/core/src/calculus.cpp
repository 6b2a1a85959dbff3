#include "euler2d/calculus.hpp"

#include "euler2d/fft.hpp"

#include <cmath>

namespace euler2d {

namespace {

// 4th-order one-sided / skewed first-derivative stencils (times 12h).
const double kOneSided0[5] = {-25.0, 48.0, -36.0, 16.0, -3.0};
const double kOneSided1[5] = {-3.0, -10.0, 18.0, -6.0, 1.0};

inline double fetch(const Field& f, int c, int i, int j, bool per1, bool polar_ghost) {
    const Grid& g = f.grid();
    if (per1) i = ((i % g.n1) + g.n1) % g.n1;
    if (polar_ghost && j > g.n2 - 1) {
        j = 2 * g.n2 - 1 - j;
        i = (i + g.n1 / 2) % g.n1;
    }
    return f.at(c, i, j);
}

void d_axis1_fd4(const Field& f, Field& out) {
    const Grid& g = f.grid();
    const double s = 1.0 / (12.0 * g.h1);
    for (int c = 0; c < f.comps(); ++c) {
        for (int j = 0; j < g.n2; ++j) {
            if (g.periodic1) {
                for (int i = 0; i < g.n1; ++i) {
                    const int im2 = (i - 2 + g.n1) % g.n1, im1 = (i - 1 + g.n1) % g.n1;
                    const int ip1 = (i + 1) % g.n1, ip2 = (i + 2) % g.n1;
                    out.at(c, i, j) = s * (f.at(c, im2, j) - 8.0 * f.at(c, im1, j) +
                                           8.0 * f.at(c, ip1, j) - f.at(c, ip2, j));
                }
            } else {
                for (int i = 0; i < g.n1; ++i) {
                    double v = 0.0;
                    if (i <= 1) {
                        const double* w = (i == 0) ? kOneSided0 : kOneSided1;
                        for (int k = 0; k < 5; ++k) v += w[k] * f.at(c, k, j);
                    } else if (i >= g.n1 - 2) {
                        const double* w = (i == g.n1 - 1) ? kOneSided0 : kOneSided1;
                        for (int k = 0; k < 5; ++k) v -= w[k] * f.at(c, g.n1 - 1 - k, j);
                    } else {
                        v = f.at(c, i - 2, j) - 8.0 * f.at(c, i - 1, j) +
                            8.0 * f.at(c, i + 1, j) - f.at(c, i + 2, j);
                    }
                    out.at(c, i, j) = s * v;
                }
            }
        }
    }
}

void d_axis2_fd4(const Field& f, Field& out, bool polar_ghost) {
    const Grid& g = f.grid();
    const double s = 1.0 / (12.0 * g.h2);
    for (int c = 0; c < f.comps(); ++c) {
        for (int j = 0; j < g.n2; ++j) {
            const bool low = (j <= 1);
            const bool high = (j >= g.n2 - 2);
            for (int i = 0; i < g.n1; ++i) {
                double v = 0.0;
                if (!low && (!high || polar_ghost)) {
                    v = fetch(f, c, i, j - 2, g.periodic1, polar_ghost) -
                        8.0 * fetch(f, c, i, j - 1, g.periodic1, polar_ghost) +
                        8.0 * fetch(f, c, i, j + 1, g.periodic1, polar_ghost) -
                        fetch(f, c, i, j + 2, g.periodic1, polar_ghost);
                } else if (low) {
                    const double* w = (j == 0) ? kOneSided0 : kOneSided1;
                    for (int k = 0; k < 5; ++k) v += w[k] * f.at(c, i, k);
                } else {
                    const double* w = (j == g.n2 - 1) ? kOneSided0 : kOneSided1;
                    for (int k = 0; k < 5; ++k) v -= w[k] * f.at(c, i, g.n2 - 1 - k);
                }
                out.at(c, i, j) = s * v;
            }
        }
    }
}

void d_axis1_spectral(const Field& f, Field& out) {
    const Grid& g = f.grid();
    std::vector<double> row(g.n1);
    for (int c = 0; c < f.comps(); ++c) {
        for (int j = 0; j < g.n2; ++j) {
            for (int i = 0; i < g.n1; ++i) row[i] = f.at(c, i, j);
            auto dr = spectral_derivative(row, 1);
            for (int i = 0; i < g.n1; ++i) out.at(c, i, j) = dr[i];
        }
    }
}

} // namespace

Field dref(const Field& f, int axis, bool spectral, bool polar_ghost) {
    Field out(f.grid(), f.comps());
    if (axis == 1) {
        if (spectral) {
            if (!f.grid().periodic1) throw Error("calculus: spectral axis must be periodic");
            d_axis1_spectral(f, out);
        } else {
            d_axis1_fd4(f, out);
        }
    } else {
        d_axis2_fd4(f, out, polar_ghost);
    }
    return out;
}

Field dref1(const Domain& d, const Field& f) { return dref(f, 1, d.spectral1()); }
Field dref2(const Domain& d, const Field& f) {
    return dref(f, 2, false, d.mode == DomainMode::disk);
}

Field grad(const Domain& d, const Field& scalar) {
    Field d1 = dref1(d, scalar), d2 = dref2(d, scalar);
    Field out(d.grid, 2);
    for (int j = 0; j < d.grid.n2; ++j)
        for (int i = 0; i < d.grid.n1; ++i) {
            const Mat2 Ti = d.map_jacobian(d.grid.x1(i), d.grid.x2(j)).inverse();
            // grad_phys = (grad Theta)^{-T} grad_ref
            out.set_vec(i, j, Ti.applyT(Vec2{d1.at(0, i, j), d2.at(0, i, j)}));
        }
    return out;
}

Field jacobian(const Domain& d, const Field& vec) {
    Field d1 = dref1(d, vec), d2 = dref2(d, vec);
    Field out(d.grid, 4);
    for (int j = 0; j < d.grid.n2; ++j)
        for (int i = 0; i < d.grid.n1; ++i) {
            const Mat2 Ti = d.map_jacobian(d.grid.x1(i), d.grid.x2(j)).inverse();
            Mat2 Dref; // d vec_c / d ref_a
            Dref.m[0][0] = d1.at(0, i, j); Dref.m[0][1] = d2.at(0, i, j);
            Dref.m[1][0] = d1.at(1, i, j); Dref.m[1][1] = d2.at(1, i, j);
            out.set_mat(i, j, Dref.mul(Ti));
        }
    return out;
}

Field divergence(const Domain& d, const Field& vec) {
    Field Jm = jacobian(d, vec);
    Field out(d.grid, 1);
    for (int n = 0; n < out.size(); ++n) out.atn(0, n) = Jm.atn(0, n) + Jm.atn(3, n);
    return out;
}

Field curl2d(const Domain& d, const Field& vec) {
    Field Jm = jacobian(d, vec);
    Field out(d.grid, 1);
    for (int n = 0; n < out.size(); ++n) out.atn(0, n) = Jm.atn(2, n) - Jm.atn(1, n);
    return out;
}

double inner(const Domain& d, const Field& a, const Field& b) {
    double s = 0.0;
    for (int j = 0; j < d.grid.n2; ++j)
        for (int i = 0; i < d.grid.n1; ++i) {
            const double w = d.quad_weight(i, j);
            for (int c = 0; c < a.comps(); ++c) s += w * a.at(c, i, j) * b.at(c, i, j);
        }
    return s;
}

double l2_norm(const Domain& d, const Field& a) { return std::sqrt(inner(d, a, a)); }

double integral(const Domain& d, const Field& scalar) {
    double s = 0.0;
    for (int j = 0; j < d.grid.n2; ++j)
        for (int i = 0; i < d.grid.n1; ++i) s += d.quad_weight(i, j) * scalar.at(0, i, j);
    return s;
}

} // namespace euler2d
