#ifndef EULER2D_DOMAIN_HPP
#define EULER2D_DOMAIN_HPP

#include "euler2d/field.hpp"
#include "euler2d/interp.hpp"

#include <vector>

namespace euler2d {

enum class DomainMode { disk, periodic_strip };

/// Discretization of the reference fluid domain Omega.
///
/// Both modes discretize Omega as the image of the unit reference square
/// under a fixed analytic map Theta:
///   strip: Theta(u,v) = (u, depth*v), periodic in u; free surface at v=1,
///          impermeable flat bottom at v=0.
///   disk:  Theta(u,v) = R(1-v)(cos 2 pi u, sin 2 pi u); the free boundary
///          is the bottom row v=0, and the radial axis is half-cell staggered
///          so no node sits at the pole.
/// All fields over Omega are stored as samples on this grid; physical
/// derivatives chain through the analytic Jacobian of Theta.
struct Domain {
    DomainMode mode = DomainMode::periodic_strip;
    double R = 1.0;     // disk radius
    double depth = 1.0; // strip depth
    Grid grid;

    static Domain make_strip(int n1, int n2, double depth);
    static Domain make_disk(int n1, int n2, double R);

    Vec2 map(double u, double v) const;
    Vec2 map_node(int i, int j) const { return map(grid.x1(i), grid.x2(j)); }
    Mat2 map_jacobian(double u, double v) const;
    double map_det(double u, double v) const;
    /// physical point -> reference coordinates
    Vec2 inv_map(Vec2 p) const;

    bool spectral1() const { return mode == DomainMode::periodic_strip; }
    Wrap wrap2_high() const { return mode == DomainMode::disk ? Wrap::polar : Wrap::shift; }

    /// Free-surface row index (disk: 0, strip: n2-1).
    int boundary_j() const { return mode == DomainMode::disk ? 0 : grid.n2 - 1; }
    int nb() const { return grid.n1; }
    double bh() const { return grid.h1; }
    /// Length of d Theta/du along the free surface (constant in both modes).
    double boundary_param_speed() const;
    /// Outward unit normal from a unit boundary tangent.
    Vec2 outward_from_tangent(Vec2 t) const {
        if (mode == DomainMode::disk) return {t.y, -t.x};
        return {-t.y, t.x};
    }

    /// Quadrature weight for volume integrals, including |det grad Theta|.
    double quad_weight(int i, int j) const;
    double volume() const; // discrete measure of Omega

    /// Reference-square samples of a function of physical position.
    template <class F> Field sample_scalar(F&& f) const {
        Field out(grid, 1);
        for (int j = 0; j < grid.n2; ++j)
            for (int i = 0; i < grid.n1; ++i) out.at(0, i, j) = f(map_node(i, j));
        return out;
    }
    template <class F> Field sample_vector(F&& f) const {
        Field out(grid, 2);
        for (int j = 0; j < grid.n2; ++j)
            for (int i = 0; i < grid.n1; ++i) out.set_vec(i, j, f(map_node(i, j)));
        return out;
    }

    /// Identity flow map eta = Id as a vector field (physical node positions).
    Field identity_map() const { return sample_vector([](Vec2 p) { return p; }); }

    /// Bicubic interpolation of a grid field at arbitrary physical points.
    std::vector<double> interp_at_physical(const Field& f, const std::vector<Vec2>& phys) const;

    /// Extract the free-surface row of a field (component-major):
    /// out[c*n1 + i].
    std::vector<double> boundary_row(const Field& f) const;
    void set_boundary_row(Field& f, const std::vector<double>& row) const;
};

} // namespace euler2d

#endif
