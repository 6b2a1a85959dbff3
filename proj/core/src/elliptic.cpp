#include "euler2d/elliptic.hpp"

#include "euler2d/fft.hpp"

#include <cmath>
#include <complex>

namespace euler2d {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

Mat2 sandwich(const Mat2& cofT, const Mat2& P, double Jdet) {
    // (1/J) cof(T)^T P cof(T)
    Mat2 s = cofT.transpose().mul(P).mul(cofT);
    for (auto& row : s.m)
        for (double& v : row) v /= Jdet;
    return s;
}
} // namespace

Field flow_coefficient(const Domain& d, const PullbackCache& c) {
    Field P(d.grid, 4);
    for (int j = 0; j < d.grid.n2; ++j)
        for (int i = 0; i < d.grid.n1; ++i) {
            const Mat2 cof = c.cof_k.mat(i, j);
            const double J = c.J_k.at(0, i, j);
            P.set_mat(i, j, sandwich(Mat2::identity(), cof, J)); // cof^T I cof / J
        }
    return P;
}

EllipticSolver::EllipticSolver(const Domain& d, BCType surface, BCType bottom)
    : dom_(&d), surface_(surface), bottom_(bottom), n1_(d.grid.n1), n2_(d.grid.n2),
      N_(d.grid.size()) {
    free_index_.assign(N_, -1);
    const int jsurf = d.boundary_j();
    for (int j = 0; j < n2_; ++j) {
        const bool dir_row =
            (j == jsurf && surface_ == BCType::dirichlet) ||
            (d.mode == DomainMode::periodic_strip && j == 0 && bottom_ == BCType::dirichlet);
        if (dir_row) continue;
        for (int i = 0; i < n1_; ++i) free_index_[d.grid.idx(i, j)] = 0;
    }
    nfree_ = 0;
    for (int n = 0; n < N_; ++n)
        if (free_index_[n] == 0) {
            free_index_[n] = nfree_++;
            free_nodes_.push_back(n);
        }
    roww_.resize(n2_);
    for (int j = 0; j < n2_; ++j) {
        double w = 1.0;
        if (d.grid.staggered2) {
            if (j == 0) w = 0.5;
        } else if (j == 0 || j == n2_ - 1) {
            w = 0.5;
        }
        roww_[j] = w;
    }
    if (d.mode == DomainMode::periodic_strip) {
        for (int j = 0; j < n2_; ++j)
            if (free_index_[d.grid.idx(0, j)] >= 0) free_rows_.push_back(j);
    }
}

bool EllipticSolver::pure_neumann() const {
    if (dom_->mode == DomainMode::disk) return surface_ == BCType::neumann;
    return surface_ == BCType::neumann && bottom_ == BCType::neumann;
}

double EllipticSolver::node_weight(int i, int j) const {
    (void)i;
    return dom_->grid.h1 * dom_->grid.h2 * roww_[j];
}

Mat2 EllipticSolver::flow_P_node(int i, int j) const {
    return Pfield_.mat(i, j);
}

void EllipticSolver::set_identity_coefficient() {
    Field P(dom_->grid, 4);
    for (int j = 0; j < n2_; ++j)
        for (int i = 0; i < n1_; ++i) P.set_mat(i, j, Mat2::identity());
    set_flow_coefficient(P);
}

void EllipticSolver::set_flow_coefficient(const Field& P) {
    Pfield_ = P;
    if (dom_->mode == DomainMode::disk) assemble_disk(P);
    else assemble_strip(P);
    assembled_ = true;
}

namespace {
// K at an arbitrary reference point from the averaged flow part Pbar.
Mat2 K_from_map(const Domain& d, const Mat2& Pbar, double u, double v) {
    const Mat2 T = d.map_jacobian(u, v);
    const double J = d.map_det(u, v);
    Mat2 cofT = T.cof();
    Mat2 K = cofT.transpose().mul(Pbar).mul(cofT);
    for (auto& row : K.m)
        for (double& x : row) x /= J;
    return K;
}

Mat2 avg(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = 0.5 * (a.m[i][j] + b.m[i][j]);
    return r;
}
} // namespace

void EllipticSolver::assemble_disk(const Field& P) {
    const Grid& g = dom_->grid;
    const double h1 = g.h1, h2 = g.h2;
    std::vector<Eigen::Triplet<double>> trip;
    coupling_.clear();
    trip.reserve(static_cast<size_t>(N_) * 12);

    auto add = [&](int nr, int nc, double v) {
        const int fr = free_index_[nr], fc = free_index_[nc];
        if (fr < 0) return;
        if (fc < 0) coupling_.emplace_back(fr, nc, v);
        else trip.emplace_back(fr, fc, v);
    };

    // x1 fluxes
    for (int j = 0; j < n2_; ++j)
        for (int i = 0; i < n1_; ++i) {
            const int i2 = (i + 1) % n1_;
            const Mat2 Pb = avg(P.mat(i, j), P.mat(i2, j));
            const Mat2 K = K_from_map(*dom_, Pb, (i + 0.5) * h1, g.x2(j));
            const double cf = K.m[0][0] * roww_[j] * h2 / h1;
            const int a = g.idx(i, j), b = g.idx(i2, j);
            add(a, a, cf); add(b, b, cf); add(a, b, -cf); add(b, a, -cf);
        }
    // x2 fluxes (the pole face above the last ring carries zero coefficient
    // exactly and is omitted)
    for (int j = 0; j + 1 < n2_; ++j)
        for (int i = 0; i < n1_; ++i) {
            const Mat2 Pb = avg(P.mat(i, j), P.mat(i, j + 1));
            const Mat2 K = K_from_map(*dom_, Pb, g.x1(i), (j + 0.5) * h2);
            const double cf = K.m[1][1] * h1 / h2;
            const int a = g.idx(i, j), b = g.idx(i, j + 1);
            add(a, a, cf); add(b, b, cf); add(a, b, -cf); add(b, a, -cf);
        }
    // cross terms, centered differences (pole ghost on the high side)
    struct StencilEntry { int node; double w; };
    for (int j = 0; j < n2_; ++j)
        for (int i = 0; i < n1_; ++i) {
            const Mat2 K = K_from_map(*dom_, P.mat(i, j), g.x1(i), g.x2(j));
            const double k12 = K.m[0][1];
            if (k12 == 0.0) continue;
            const double w = h1 * h2 * roww_[j] * k12;
            StencilEntry d1[2] = {{g.idx((i - 1 + n1_) % n1_, j), -0.5 / h1},
                                  {g.idx((i + 1) % n1_, j), 0.5 / h1}};
            std::vector<StencilEntry> d2;
            if (j == 0) {
                d2 = {{g.idx(i, 0), -1.5 / h2}, {g.idx(i, 1), 2.0 / h2}, {g.idx(i, 2), -0.5 / h2}};
            } else if (j == n2_ - 1) {
                // ghost across the pole: value at (i + n1/2, n2-1)
                d2 = {{g.idx((i + n1_ / 2) % n1_, j), 0.5 / h2}, {g.idx(i, j - 1), -0.5 / h2}};
            } else {
                d2 = {{g.idx(i, j - 1), -0.5 / h2}, {g.idx(i, j + 1), 0.5 / h2}};
            }
            for (const auto& r : d1)
                for (const auto& c : d2) {
                    add(r.node, c.node, w * r.w * c.w);
                    add(c.node, r.node, w * r.w * c.w);
                }
        }

    A_.resize(nfree_, nfree_);
    A_.setFromTriplets(trip.begin(), trip.end());
    // keep any existing factorization as a preconditioner; solves refactor on
    // demand when PCG stalls
}

void EllipticSolver::assemble_strip(const Field& P) {
    const Grid& g = dom_->grid;
    const double h1 = g.h1, h2 = g.h2, d = dom_->depth;
    std::vector<Eigen::Triplet<double>> trip;
    coupling_.clear();

    auto add = [&](int nr, int nc, double v) {
        if (v == 0.0) return;
        const int fr = free_index_[nr], fc = free_index_[nc];
        if (fr < 0) return;
        if (fc < 0) coupling_.emplace_back(fr, nc, v);
        else trip.emplace_back(fr, fc, v);
    };

    // deviation form: dK = K - K_flat, K_flat = diag(d, 1/d)
    for (int j = 0; j < n2_; ++j)
        for (int i = 0; i < n1_; ++i) {
            const int i2 = (i + 1) % n1_;
            const Mat2 Pb = avg(P.mat(i, j), P.mat(i2, j));
            const Mat2 K = K_from_map(*dom_, Pb, (i + 0.5) * h1, g.x2(j));
            const double cf = (K.m[0][0] - d) * roww_[j] * h2 / h1;
            const int a = g.idx(i, j), b = g.idx(i2, j);
            add(a, a, cf); add(b, b, cf); add(a, b, -cf); add(b, a, -cf);
        }
    for (int j = 0; j + 1 < n2_; ++j)
        for (int i = 0; i < n1_; ++i) {
            const Mat2 Pb = avg(P.mat(i, j), P.mat(i, j + 1));
            const Mat2 K = K_from_map(*dom_, Pb, g.x1(i), (j + 0.5) * h2);
            const double cf = (K.m[1][1] - 1.0 / d) * h1 / h2;
            const int a = g.idx(i, j), b = g.idx(i, j + 1);
            add(a, a, cf); add(b, b, cf); add(a, b, -cf); add(b, a, -cf);
        }
    struct StencilEntry { int node; double w; };
    for (int j = 0; j < n2_; ++j)
        for (int i = 0; i < n1_; ++i) {
            const Mat2 K = K_from_map(*dom_, P.mat(i, j), g.x1(i), g.x2(j));
            const double k12 = K.m[0][1];
            if (k12 == 0.0) continue;
            const double w = h1 * h2 * roww_[j] * k12;
            StencilEntry d1[2] = {{g.idx((i - 1 + n1_) % n1_, j), -0.5 / h1},
                                  {g.idx((i + 1) % n1_, j), 0.5 / h1}};
            std::vector<StencilEntry> d2;
            if (j == 0)
                d2 = {{g.idx(i, 0), -1.5 / h2}, {g.idx(i, 1), 2.0 / h2}, {g.idx(i, 2), -0.5 / h2}};
            else if (j == n2_ - 1)
                d2 = {{g.idx(i, j), 1.5 / h2}, {g.idx(i, j - 1), -2.0 / h2}, {g.idx(i, j - 2), 0.5 / h2}};
            else
                d2 = {{g.idx(i, j - 1), -0.5 / h2}, {g.idx(i, j + 1), 0.5 / h2}};
            for (const auto& r : d1)
                for (const auto& c : d2) {
                    add(r.node, c.node, w * r.w * c.w);
                    add(c.node, r.node, w * r.w * c.w);
                }
        }
    A_.resize(nfree_, nfree_);
    A_.setFromTriplets(trip.begin(), trip.end());
    build_strip_modes();
}

void EllipticSolver::ModeSolver::factor() {
    const int n = static_cast<int>(a_diag.size());
    diag = a_diag;
    lower.assign(n, 0.0);
    for (int k = 1; k < n; ++k) {
        lower[k] = a_off[k - 1] / diag[k - 1];
        diag[k] -= lower[k] * a_off[k - 1];
    }
}

void EllipticSolver::ModeSolver::solve(std::vector<double>& x) const {
    const int n = static_cast<int>(diag.size());
    for (int k = 1; k < n; ++k) x[k] -= lower[k] * x[k - 1];
    for (int k = 0; k < n; ++k) x[k] /= diag[k];
    for (int k = n - 2; k >= 0; --k) x[k] -= lower[k + 1] * x[k + 1];
}

void EllipticSolver::ModeSolver::apply(const std::vector<double>& x, std::vector<double>& y) const {
    const int n = static_cast<int>(a_diag.size());
    for (int k = 0; k < n; ++k) {
        double v = a_diag[k] * x[k];
        if (k > 0) v += a_off[k - 1] * x[k - 1];
        if (k + 1 < n) v += a_off[k] * x[k + 1];
        y[k] = v;
    }
}

void EllipticSolver::build_strip_modes() {
    const Grid& g = dom_->grid;
    const double h1 = g.h1, h2 = g.h2, d = dom_->depth;
    const int nm = n1_ / 2 + 1;
    modes_.assign(nm, ModeSolver{});
    const int nr = static_cast<int>(free_rows_.size());
    for (int m = 0; m < nm; ++m) {
        const double k = kTwoPi * m;
        ModeSolver& ms = modes_[m];
        ms.a_diag.assign(nr, 0.0);
        ms.a_off.assign(nr > 0 ? nr - 1 : 0, 0.0);
        for (int r = 0; r < nr; ++r) {
            const int j = free_rows_[r];
            ms.a_diag[r] += d * k * k * roww_[j] * h2 * h1;
            // faces to j-1 and j+1 (only when those rows exist in the grid)
            if (j - 1 >= 0) ms.a_diag[r] += (1.0 / d) * h1 / h2;
            if (j + 1 <= n2_ - 1) ms.a_diag[r] += (1.0 / d) * h1 / h2;
        }
        for (int r = 0; r + 1 < nr; ++r)
            if (free_rows_[r + 1] == free_rows_[r] + 1) ms.a_off[r] = -(1.0 / d) * h1 / h2;
        if (m == 0 && pure_neumann()) {
            // preconditioner regularization of the singular constant mode
            for (int r = 0; r < nr; ++r) ms.a_diag[r] += 1e-8 * h1 * h2;
        }
        ms.factor();
    }
}

std::vector<double> EllipticSolver::strip_flat_apply(const std::vector<double>& q_free) const {
    const int nr = static_cast<int>(free_rows_.size());
    std::vector<std::vector<std::complex<double>>> hat(nr);
    for (int r = 0; r < nr; ++r) {
        std::vector<double> row(n1_);
        for (int i = 0; i < n1_; ++i) row[i] = q_free[static_cast<size_t>(r) * n1_ + i];
        hat[r] = rfft(row);
    }
    const Grid& g = dom_->grid;
    const double h1 = g.h1, h2 = g.h2, d = dom_->depth;
    std::vector<std::vector<std::complex<double>>> out(nr,
        std::vector<std::complex<double>>(n1_ / 2 + 1));
    std::vector<double> xr(nr), xi(nr), yr(nr), yi(nr);
    for (int m = 0; m <= n1_ / 2; ++m) {
        const double k = kTwoPi * m;
        // assemble tridiagonal action on this mode (without the neumann
        // regularization used by the preconditioner)
        for (int r = 0; r < nr; ++r) { xr[r] = hat[r][m].real(); xi[r] = hat[r][m].imag(); }
        for (int r = 0; r < nr; ++r) {
            const int j = free_rows_[r];
            double diag = d * k * k * roww_[j] * h2 * h1;
            if (j - 1 >= 0) diag += (1.0 / d) * h1 / h2;
            if (j + 1 <= n2_ - 1) diag += (1.0 / d) * h1 / h2;
            double vr = diag * xr[r], vi = diag * xi[r];
            if (r > 0 && free_rows_[r - 1] == free_rows_[r] - 1) {
                vr -= (1.0 / d) * h1 / h2 * xr[r - 1];
                vi -= (1.0 / d) * h1 / h2 * xi[r - 1];
            }
            if (r + 1 < nr && free_rows_[r + 1] == free_rows_[r] + 1) {
                vr -= (1.0 / d) * h1 / h2 * xr[r + 1];
                vi -= (1.0 / d) * h1 / h2 * xi[r + 1];
            }
            yr[r] = vr; yi[r] = vi;
        }
        for (int r = 0; r < nr; ++r) out[r][m] = {yr[r], yi[r]};
    }
    std::vector<double> y(q_free.size());
    for (int r = 0; r < nr; ++r) {
        auto row = irfft(out[r], n1_);
        for (int i = 0; i < n1_; ++i) y[static_cast<size_t>(r) * n1_ + i] = row[i];
    }
    return y;
}

std::vector<double> EllipticSolver::apply_form(const std::vector<double>& q_free) const {
    if (!assembled_) throw SolverError("elliptic: coefficient not set");
    Eigen::Map<const Eigen::VectorXd> x(q_free.data(), nfree_);
    Eigen::VectorXd y = A_ * x;
    std::vector<double> out(y.data(), y.data() + nfree_);
    if (dom_->mode == DomainMode::periodic_strip) {
        auto flat = strip_flat_apply(q_free);
        for (int k = 0; k < nfree_; ++k) out[k] += flat[k];
    }
    return out;
}

double EllipticSolver::make_compatible(Field& f, const std::vector<double>& surface_flux,
                                       const std::vector<double>& bottom_flux) const {
    const Grid& g = dom_->grid;
    double F1 = 0.0, wsum = 0.0;
    for (int j = 0; j < n2_; ++j)
        for (int i = 0; i < n1_; ++i) {
            F1 -= node_weight(i, j) * f.at(0, i, j);
            wsum += node_weight(i, j);
        }
    if (!surface_flux.empty())
        for (int i = 0; i < n1_; ++i) F1 += surface_flux[i] * g.h1;
    if (!bottom_flux.empty())
        for (int i = 0; i < n1_; ++i) F1 += bottom_flux[i] * g.h1;
    const double c = F1 / wsum;
    for (int n = 0; n < f.size(); ++n) f.atn(0, n) -= c;
    return F1;
}

Field EllipticSolver::solve(const Field& f, const std::vector<double>& surface_data,
                            const std::vector<double>& bottom_data, EllipticStats* stats) {
    if (!assembled_) throw SolverError("elliptic: coefficient not set");
    if (dom_->mode == DomainMode::disk) return solve_disk(f, surface_data, stats);
    return solve_strip(f, surface_data, bottom_data, stats);
}

namespace {
double vnorm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}
} // namespace

Field EllipticSolver::solve_disk(const Field& f, const std::vector<double>& surface_data,
                                 EllipticStats* stats) {
    const Grid& g = dom_->grid;
    std::vector<double> rhs(nfree_, 0.0);
    for (int k = 0; k < nfree_; ++k) {
        const int n = free_nodes_[k];
        rhs[k] = -node_weight(n % n1_, n / n1_) * f.atn(0, n);
    }
    const int jsurf = dom_->boundary_j();
    if (surface_ == BCType::dirichlet) {
        for (const auto& t : coupling_) {
            const int bi = t.col() % n1_;
            const int bj = t.col() / n1_;
            if (bj != jsurf) throw SolverError("elliptic: unexpected coupling row");
            rhs[t.row()] -= t.value() * surface_data[bi];
        }
    } else {
        for (int i = 0; i < n1_; ++i) {
            const int k = free_index_[g.idx(i, jsurf)];
            rhs[k] += surface_data[i] * g.h1;
        }
    }

    Eigen::Map<const Eigen::VectorXd> b(rhs.data(), nfree_);
    Eigen::VectorXd x(nfree_);
    const double bn = b.norm();
    bool refact = false;
    int iters = 0;

    if (pure_neumann()) {
        // bordered system enforcing a zero weighted mean
        Eigen::SparseMatrix<double> B(nfree_ + 1, nfree_ + 1);
        std::vector<Eigen::Triplet<double>> trip;
        for (int kk = 0; kk < A_.outerSize(); ++kk)
            for (Eigen::SparseMatrix<double>::InnerIterator it(A_, kk); it; ++it)
                trip.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
        for (int k = 0; k < nfree_; ++k) {
            const int n = free_nodes_[k];
            const double w = node_weight(n % n1_, n / n1_);
            trip.emplace_back(k, nfree_, w);
            trip.emplace_back(nfree_, k, w);
        }
        B.setFromTriplets(trip.begin(), trip.end());
        Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
        lu.compute(B);
        if (lu.info() != Eigen::Success) throw SolverError("elliptic: singular Neumann assembly");
        Eigen::VectorXd bb(nfree_ + 1);
        bb.head(nfree_) = b;
        bb[nfree_] = 0.0;
        Eigen::VectorXd xx = lu.solve(bb);
        x = xx.head(nfree_);
        refact = true;
    } else {
        if (!have_factor_) {
            if (!factor_) factor_ = std::make_unique<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>>();
            factor_->compute(A_);
            if (factor_->info() != Eigen::Success) throw SolverError("elliptic: factorization failed");
            A_fact_ = A_;
            have_factor_ = true;
            refact = true;
        }
        // preconditioned CG with the cached factorization
        auto pcg = [&](Eigen::VectorXd& sol, int maxit, double tol) -> bool {
            sol = factor_->solve(b);
            Eigen::VectorXd r = b - A_ * sol;
            if (bn == 0.0) { sol.setZero(); return true; }
            if (r.norm() <= tol * bn) return true;
            Eigen::VectorXd z = factor_->solve(r);
            Eigen::VectorXd p = z;
            double rz = r.dot(z);
            for (int it = 0; it < maxit; ++it) {
                Eigen::VectorXd Ap = A_ * p;
                const double alpha = rz / p.dot(Ap);
                sol += alpha * p;
                r -= alpha * Ap;
                ++iters;
                if (r.norm() <= tol * bn) return true;
                z = factor_->solve(r);
                const double rz2 = r.dot(z);
                p = z + (rz2 / rz) * p;
                rz = rz2;
            }
            return false;
        };
        if (!pcg(x, 30, 1e-12)) {
            factor_->compute(A_);
            if (factor_->info() != Eigen::Success) throw SolverError("elliptic: factorization failed");
            A_fact_ = A_;
            refact = true;
            if (!pcg(x, 30, 1e-12))
                throw SolverError("elliptic: PCG failed after refactorization, residual " +
                                  std::to_string((b - A_ * x).norm() / (bn > 0 ? bn : 1.0)));
        }
    }

    const double rres = bn > 0.0 ? (b - A_ * x).norm() / bn : 0.0;
    if (stats) { stats->rel_residual = rres; stats->iterations = iters; stats->refactorized = refact; }

    Field q(g, 1);
    for (int k = 0; k < nfree_; ++k) q.atn(0, free_nodes_[k]) = x[k];
    if (surface_ == BCType::dirichlet)
        for (int i = 0; i < n1_; ++i) q.at(0, i, jsurf) = surface_data[i];
    return q;
}

Field EllipticSolver::solve_strip(const Field& f, const std::vector<double>& surface_data,
                                  const std::vector<double>& bottom_data, EllipticStats* stats) {
    const Grid& g = dom_->grid;
    const double h1 = g.h1, h2 = g.h2, d = dom_->depth;
    const int nr = static_cast<int>(free_rows_.size());
    const int nf = nr * n1_;
    if (nf != nfree_) throw SolverError("elliptic: strip index mismatch");

    std::vector<double> rhs(nfree_, 0.0);
    auto fpos = [&](int i, int j) {
        // free layout: row-major over free_rows_
        int r = -1;
        for (int t = 0; t < nr; ++t)
            if (free_rows_[t] == j) { r = t; break; }
        return static_cast<size_t>(r) * n1_ + i;
    };
    for (int r = 0; r < nr; ++r) {
        const int j = free_rows_[r];
        for (int i = 0; i < n1_; ++i)
            rhs[static_cast<size_t>(r) * n1_ + i] = -node_weight(i, j) * f.at(0, i, j);
    }
    // Neumann fluxes
    if (surface_ == BCType::neumann && !surface_data.empty())
        for (int i = 0; i < n1_; ++i) rhs[fpos(i, n2_ - 1)] += surface_data[i] * h1;
    if (bottom_ == BCType::neumann && !bottom_data.empty())
        for (int i = 0; i < n1_; ++i) rhs[fpos(i, 0)] += bottom_data[i] * h1;
    // Dirichlet couplings: flat operator face terms + deviation couplings
    if (surface_ == BCType::dirichlet)
        for (int i = 0; i < n1_; ++i)
            rhs[fpos(i, n2_ - 2)] += (1.0 / d) * h1 / h2 * surface_data[i];
    if (bottom_ == BCType::dirichlet)
        for (int i = 0; i < n1_; ++i)
            rhs[fpos(i, 1)] += (1.0 / d) * h1 / h2 * bottom_data[i];
    for (const auto& t : coupling_) {
        const int bi = t.col() % n1_;
        const int bj = t.col() / n1_;
        const double val = (bj == n2_ - 1) ? surface_data[bi] : bottom_data[bi];
        rhs[t.row()] -= t.value() * val;
    }

    // PCG on A = A_flat + dA with per-mode flat preconditioner
    auto apply = [&](const std::vector<double>& xv) {
        Eigen::Map<const Eigen::VectorXd> xm(xv.data(), nfree_);
        Eigen::VectorXd dv = A_ * xm;
        auto flat = strip_flat_apply(xv);
        std::vector<double> y(nfree_);
        for (int k = 0; k < nfree_; ++k) y[k] = flat[k] + dv[k];
        return y;
    };
    auto precond = [&](const std::vector<double>& rv) {
        std::vector<std::vector<std::complex<double>>> hat(nr);
        for (int r = 0; r < nr; ++r) {
            std::vector<double> row(rv.begin() + static_cast<size_t>(r) * n1_,
                                    rv.begin() + static_cast<size_t>(r + 1) * n1_);
            hat[r] = rfft(row);
        }
        std::vector<double> xr(nr), xi(nr);
        for (int m = 0; m <= n1_ / 2; ++m) {
            for (int r = 0; r < nr; ++r) { xr[r] = hat[r][m].real(); xi[r] = hat[r][m].imag(); }
            modes_[m].solve(xr);
            modes_[m].solve(xi);
            for (int r = 0; r < nr; ++r) hat[r][m] = {xr[r], xi[r]};
        }
        std::vector<double> z(nfree_);
        for (int r = 0; r < nr; ++r) {
            auto row = irfft(hat[r], n1_);
            for (int i = 0; i < n1_; ++i) z[static_cast<size_t>(r) * n1_ + i] = row[i];
        }
        return z;
    };
    auto demean = [&](std::vector<double>& v) {
        if (!pure_neumann()) return;
        double s = 0.0, w = 0.0;
        for (int r = 0; r < nr; ++r)
            for (int i = 0; i < n1_; ++i) {
                const double ww = node_weight(i, free_rows_[r]);
                s += ww * v[static_cast<size_t>(r) * n1_ + i];
                w += ww;
            }
        const double mean = s / w;
        for (double& x : v) x -= mean;
    };

    const double bn = vnorm(rhs);
    std::vector<double> x(nfree_, 0.0);
    int iters = 0;
    if (bn > 0.0) {
        std::vector<double> r = rhs;
        demean(r);
        std::vector<double> z = precond(r);
        demean(z);
        std::vector<double> p = z;
        double rz = 0.0;
        for (int k = 0; k < nfree_; ++k) rz += r[k] * z[k];
        const int maxit = 200;
        bool converged = false;
        for (int it = 0; it < maxit; ++it) {
            auto Ap = apply(p);
            double pAp = 0.0;
            for (int k = 0; k < nfree_; ++k) pAp += p[k] * Ap[k];
            if (pAp <= 0.0) throw SolverError("elliptic: strip operator lost positivity");
            const double alpha = rz / pAp;
            for (int k = 0; k < nfree_; ++k) { x[k] += alpha * p[k]; r[k] -= alpha * Ap[k]; }
            ++iters;
            if (vnorm(r) <= 1e-12 * bn) { converged = true; break; }
            z = precond(r);
            demean(z);
            double rz2 = 0.0;
            for (int k = 0; k < nfree_; ++k) rz2 += r[k] * z[k];
            const double beta = rz2 / rz;
            for (int k = 0; k < nfree_; ++k) p[k] = z[k] + beta * p[k];
            rz = rz2;
        }
        if (!converged && vnorm(r) > 1e-9 * bn)
            throw SolverError("elliptic: strip PCG did not converge, residual " +
                              std::to_string(vnorm(r) / bn));
        demean(x);
    }
    if (stats) {
        auto Ax = apply(x);
        double rn = 0.0;
        for (int k = 0; k < nfree_; ++k) { const double e = rhs[k] - Ax[k]; rn += e * e; }
        stats->rel_residual = bn > 0 ? std::sqrt(rn) / bn : 0.0;
        stats->iterations = iters;
    }

    Field q(g, 1);
    for (int r = 0; r < nr; ++r)
        for (int i = 0; i < n1_; ++i) q.at(0, i, free_rows_[r]) = x[static_cast<size_t>(r) * n1_ + i];
    if (surface_ == BCType::dirichlet)
        for (int i = 0; i < n1_; ++i) q.at(0, i, n2_ - 1) = surface_data[i];
    if (bottom_ == BCType::dirichlet)
        for (int i = 0; i < n1_; ++i) q.at(0, i, 0) = bottom_data[i];
    return q;
}

} // namespace euler2d
