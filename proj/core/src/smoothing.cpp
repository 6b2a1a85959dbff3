#include "euler2d/smoothing.hpp"

#include "euler2d/norms.hpp"

#include <cmath>
#include <string>

namespace euler2d {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

void convolve_rows(const Field& in, Field& out, const Mollifier::Kernel& k, bool periodic,
                   int support_lo, int support_hi) {
    const Grid& g = in.grid();
    for (int c = 0; c < in.comps(); ++c) {
        for (int j = 0; j < g.n2; ++j) {
            for (int i = 0; i < g.n1; ++i) {
                double acc = 0.0;
                if (periodic) {
                    for (int o = -k.r; o <= k.r; ++o) {
                        int idx = ((i - o) % g.n1 + g.n1) % g.n1;
                        acc += k.weight(o) * in.at(c, idx, j);
                    }
                } else {
                    if (i + k.r < support_lo || i - k.r > support_hi) {
                        out.at(c, i, j) = 0.0;
                        continue;
                    }
                    for (int o = -k.r; o <= k.r; ++o) {
                        const int idx = i - o;
                        if (idx < 0 || idx >= g.n1) continue; // zero outside (support-margined)
                        acc += k.weight(o) * in.at(c, idx, j);
                    }
                }
                out.at(c, i, j) = acc;
            }
        }
    }
}

// column range touched by nonzero data
void support_columns(const Field& w, int* lo, int* hi) {
    const Grid& g = w.grid();
    const double tol = 1e-14 * std::max(1.0, w.max_abs());
    int a = g.n1, b = -1;
    for (int i = 0; i < g.n1; ++i) {
        bool nz = false;
        for (int c = 0; c < w.comps() && !nz; ++c)
            for (int j = 0; j < g.n2 && !nz; ++j)
                if (std::abs(w.at(c, i, j)) > tol) nz = true;
        if (nz) { b = i; if (a == g.n1) a = i; }
    }
    *lo = a; *hi = b;
}

} // namespace

Field horizontal_convolve(const Field& w, double delta, const Mollifier& m) {
    const Grid& g = w.grid();
    const Mollifier::Kernel k = m.kernel(g.h1, delta);
    Field out(g, w.comps());
    if (g.periodic1) {
        convolve_rows(w, out, k, true, 0, g.n1 - 1);
        return out;
    }
    int lo, hi;
    support_columns(w, &lo, &hi);
    if (hi >= lo) {
        const double dlo = lo * g.h1, dhi = 1.0 - hi * g.h1;
        if (dlo < delta || dhi < delta)
            throw Error("horizontal_convolve: support margin " +
                        std::to_string(std::min(dlo, dhi)) + " < delta on chart " +
                        std::to_string(g.chart_id));
    }
    convolve_rows(w, out, k, false, lo == g.n1 ? 0 : lo - k.r, hi < 0 ? g.n1 - 1 : hi + k.r);
    return out;
}

CommutatorResult commutator(const Field& f, const Field& g, double kappa, const Mollifier& m) {
    if (!(f.grid() == g.grid())) throw Error("commutator: mismatched grids");
    Field fg(f.grid(), 1);
    for (int n = 0; n < fg.size(); ++n) fg.atn(0, n) = f.atn(0, n) * g.atn(0, n);
    Field a = horizontal_convolve(fg, kappa, m);
    Field b = horizontal_convolve(g, kappa, m);
    CommutatorResult res{Field(f.grid(), 1), 0.0, 0.0};
    for (int n = 0; n < fg.size(); ++n)
        res.field.atn(0, n) = a.atn(0, n) - f.atn(0, n) * b.atn(0, n);
    res.l2 = square_sobolev_norm(res.field, 0.0);
    res.h_half = square_sobolev_norm(res.field, 0.5);
    return res;
}

SmoothingOperator::SmoothingOperator(const Domain& d, const ChartAtlas& atlas, Mollifier m,
                                     double kappa)
    : dom_(&d), atlas_(&atlas), moll_(m), kappa_(kappa) {
    if (!(kappa > 0.0) || kappa >= atlas.kappa0 / 2.0)
        throw Error("smoothing: kappa must lie in (0, kappa0/2), kappa0 = " +
                    std::to_string(atlas.kappa0));
    if (d.mode == DomainMode::periodic_strip) return; // no tables needed

    const Grid& gg = d.grid;
    tables_.resize(atlas.K);
    interior_weight_.assign(gg.size(), 0.0);
    for (int j = 0; j < gg.n2; ++j)
        for (int i = 0; i < gg.n1; ++i) {
            const Vec2 p = d.map_node(i, j);
            interior_weight_[gg.idx(i, j)] = atlas.alpha(atlas.K, p);
        }
    for (int l = 0; l < atlas.K; ++l) {
        const Chart& ch = atlas.charts[l];
        ChartTables t;
        const Grid& cg = ch.grid;
        t.chart_node_ref.resize(cg.size());
        t.sqrt_alpha_node.resize(cg.size());
        for (int j = 0; j < cg.n2; ++j)
            for (int i = 0; i < cg.n1; ++i) {
                const Vec2 p = ch.theta(cg.x1(i), cg.x2(j));
                const double r = p.norm();
                // chart squares poke slightly outside Omega near the corners;
                // alpha vanishes there, so clamp the sample point radially.
                Vec2 ps = p;
                if (r > d.R) ps = p * (d.R / r);
                t.chart_node_ref[cg.idx(i, j)] = d.inv_map(ps);
                t.sqrt_alpha_node[cg.idx(i, j)] = atlas.sqrt_alpha(l, p);
            }
        for (int j = 0; j < gg.n2; ++j)
            for (int i = 0; i < gg.n1; ++i) {
                const Vec2 p = d.map_node(i, j);
                const double a = atlas.alpha(l, p);
                if (a > 0.0) {
                    t.touched.push_back(gg.idx(i, j));
                    t.touched_chart_xy.push_back(ch.theta_inv(p));
                    t.touched_sqrt_alpha.push_back(std::sqrt(a));
                }
            }
        tables_[l] = std::move(t);
    }
}

Field SmoothingOperator::apply(const Field& v) const {
    const Domain& d = *dom_;
    if (d.mode == DomainMode::periodic_strip) {
        Field once = horizontal_convolve(v, kappa_, moll_);
        return horizontal_convolve(once, kappa_, moll_);
    }
    const Grid& gg = d.grid;
    Field out(gg, v.comps());
    for (int c = 0; c < v.comps(); ++c)
        for (int n = 0; n < gg.size(); ++n) out.atn(c, n) = interior_weight_[n] * v.atn(c, n);

    for (int l = 0; l < atlas_->K; ++l) {
        const ChartTables& t = tables_[l];
        const Chart& ch = atlas_->charts[l];
        const Grid& cg = ch.grid;
        // (sqrt(alpha_l) v) o theta_l on the chart grid
        std::vector<double> samples =
            interp_bicubic(v, t.chart_node_ref, Wrap::periodic, d.wrap2_high());
        Field w(cg, v.comps());
        for (int n = 0; n < cg.size(); ++n)
            for (int c = 0; c < v.comps(); ++c)
                w.atn(c, n) = t.sqrt_alpha_node[n] * samples[static_cast<size_t>(n) * v.comps() + c];
        Field s1 = horizontal_convolve(w, kappa_, moll_);
        Field s2 = horizontal_convolve(s1, kappa_, moll_);
        // scatter back: out += sqrt(alpha_l) * s2(theta_l^{-1}(p))
        std::vector<double> vals = interp_bicubic(s2, t.touched_chart_xy, Wrap::shift, Wrap::shift);
        for (size_t k = 0; k < t.touched.size(); ++k)
            for (int c = 0; c < v.comps(); ++c)
                out.atn(c, t.touched[k]) +=
                    t.touched_sqrt_alpha[k] * vals[k * v.comps() + c];
    }
    return out;
}

Field SmoothingOperator::chart_pullback_smoothed(const Field& v, int l) const {
    const Domain& d = *dom_;
    const Chart& ch = atlas_->charts[l];
    const Grid& cg = ch.grid;
    if (d.mode == DomainMode::periodic_strip) {
        // alpha == 1, theta = Theta: samples of v on the chart grid are the
        // grid samples when the chart grid matches; otherwise interpolate.
        Field w(cg, v.comps());
        std::vector<Vec2> ref(cg.size());
        for (int j = 0; j < cg.n2; ++j)
            for (int i = 0; i < cg.n1; ++i)
                ref[cg.idx(i, j)] = d.inv_map(ch.theta(cg.x1(i), cg.x2(j)));
        std::vector<double> s = interp_bicubic(v, ref, Wrap::periodic, Wrap::shift);
        for (int n = 0; n < cg.size(); ++n)
            for (int c = 0; c < v.comps(); ++c) w.atn(c, n) = s[static_cast<size_t>(n) * v.comps() + c];
        // periodic wrap in x1 for the strip chart
        Field tmp = w;
        const Grid pg = Grid::make(cg.n1, cg.n2, true, false, false, cg.chart_id);
        Field wp(pg, v.comps());
        wp.data() = tmp.data();
        Field sm = horizontal_convolve(wp, kappa_, moll_);
        Field outc(cg, v.comps());
        outc.data() = sm.data();
        return outc;
    }
    const ChartTables& t = tables_[l];
    std::vector<double> samples =
        interp_bicubic(v, t.chart_node_ref, Wrap::periodic, d.wrap2_high());
    Field w(cg, v.comps());
    for (int n = 0; n < cg.size(); ++n)
        for (int c = 0; c < v.comps(); ++c)
            w.atn(c, n) = t.sqrt_alpha_node[n] * samples[static_cast<size_t>(n) * v.comps() + c];
    return horizontal_convolve(w, kappa_, moll_);
}

std::vector<std::vector<double>> strip_boundary_smoothing_matrix(int n, double kappa,
                                                                 const Mollifier& m) {
    const double h = 1.0 / n;
    const Mollifier::Kernel k = m.kernel(h, kappa);
    std::vector<std::vector<double>> C(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int o = -k.r; o <= k.r; ++o) C[i][((i - o) % n + n) % n] += k.weight(o);
    // S = C * C
    std::vector<std::vector<double>> S(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int l = 0; l < n; ++l) s += C[i][l] * C[l][j];
            S[i][j] = s;
        }
    return S;
}

std::vector<std::vector<double>> disk_boundary_smoothing_gram(const Domain& d,
                                                              const ChartAtlas& atlas,
                                                              int n, double kappa,
                                                              const Mollifier& m) {
    std::vector<std::vector<double>> G(n, std::vector<double>(n, 0.0));
    for (int l = 0; l < atlas.K; ++l) {
        const Chart& ch = atlas.charts[l];
        const int cn = ch.grid.n1;
        const double chh = ch.grid.h1;
        const Mollifier::Kernel k = m.kernel(chh, kappa);
        // B = C M_{sqrt alpha} E, E = trigonometric sampling of boundary nodal data
        std::vector<std::vector<double>> B(cn, std::vector<double>(n, 0.0));
        std::vector<std::vector<double>> E(cn, std::vector<double>(n, 0.0));
        for (int mrow = 0; mrow < cn; ++mrow) {
            const Vec2 p = ch.theta(ch.grid.x1(mrow), 0.0);
            const double sa = atlas.sqrt_alpha(l, p * (d.R / p.norm()));
            if (sa == 0.0) continue;
            const double phi = std::atan2(p.y, p.x) / kTwoPi; // global boundary parameter
            for (int i = 0; i < n; ++i) {
                // periodic cardinal (Dirichlet) interpolation weight
                double x = phi - static_cast<double>(i) / n;
                x -= std::round(x);
                double wgt;
                if (std::abs(x) < 1e-15) wgt = 1.0;
                else wgt = std::sin(M_PI * n * x) / (n * std::tan(M_PI * x));
                E[mrow][i] = sa * wgt;
            }
        }
        for (int mrow = 0; mrow < cn; ++mrow)
            for (int i = 0; i < n; ++i) {
                double acc = 0.0;
                for (int o = -k.r; o <= k.r; ++o) {
                    const int src = mrow - o;
                    if (src < 0 || src >= cn) continue;
                    acc += k.weight(o) * E[src][i];
                }
                B[mrow][i] = acc;
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double acc = 0.0;
                for (int mrow = 0; mrow < cn; ++mrow) acc += B[mrow][i] * B[mrow][j];
                G[i][j] += chh * acc;
            }
    }
    return G;
}

} // namespace euler2d
