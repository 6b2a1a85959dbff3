#ifndef EULER2D_ATLAS_HPP
#define EULER2D_ATLAS_HPP

#include "euler2d/domain.hpp"

#include <vector>

namespace euler2d {

/// Geometry request, read from the run configuration.
struct DomainSpec {
    DomainMode mode = DomainMode::periodic_strip;
    double R = 1.0;        // disk radius
    double depth = 1.0;    // strip depth
    int K = 6;             // boundary chart count (disk)
    double kappa0 = 0.05;  // required horizontal support margin, chart units
    double overlap = 0.1;  // angular window overlap fraction
    int chart_n1 = 96, chart_n2 = 48;
};

/// One coordinate chart.  Boundary charts on the disk take the graph form
///   theta(x1,x2) = Rot(phi_c + pi/2) (W (x1 - 1/2), psi(W (x1 - 1/2)) + x2 / W)
/// with psi(u) = -sqrt(R^2 - u^2), so det grad theta = 1 exactly; x2 = 0 maps
/// into Gamma and the square interior into Omega.  The horizontal/vertical
/// scaling (W, 1/W) is what lets a handful of unit-determinant charts cover
/// the circle.  The strip's single chart is the domain map itself.
struct Chart {
    enum class Kind { boundary, interior };
    Kind kind = Kind::boundary;
    int id = 0;
    Grid grid;
    // boundary chart data (disk)
    double phi_c = 0.0; // boundary angle of the chart center
    double W = 1.0;     // horizontal scale
    double R = 1.0;
    // interior / strip chart data
    double scale = 1.0;
    Vec2 offset{0.0, 0.0};
    bool is_strip = false;
    double strip_depth = 1.0;

    Vec2 theta(double x1, double x2) const;
    Mat2 grad_theta(double x1, double x2) const;
    Vec2 theta_inv(Vec2 p) const;
    /// Height profile in chart coordinates: second local coordinate of the
    /// boundary trace before the rigid motion.
    double psi(double x1) const;
};

/// Chart atlas with subordinate partition of unity and the near-boundary
/// cutoff pair (xi, beta = 1 - xi).
struct ChartAtlas {
    DomainSpec spec;
    std::vector<Chart> charts; // K boundary charts first, then interior
    int K = 0;
    double kappa0 = 0.0;       // realized horizontal support margin
    double collar_full = 0.0;  // radial extent of the boundary collar
    double collar_inner = 0.0; // chi == 1 for r >= R - collar_inner
    double xi_inner = 0.0;     // xi == 1 for r >= R - xi_inner
    double support_half_angle = 0.0;

    double alpha(int l, Vec2 p) const;      // partition member at a physical point
    double sqrt_alpha(int l, Vec2 p) const;
    double alpha_sum(Vec2 p) const;         // should be 1 everywhere
    double xi(Vec2 p) const;                // == 1 near Gamma
    double beta_cut(Vec2 p) const;          // == 1 off supp xi
    double chi(double r) const;             // radial collar cutoff (disk)
    double angle_bump(int l, double phi) const;
};

/// Builds the atlas (disk: K boundary charts + one interior chart; strip:
/// the single degenerate chart with alpha == 1).  Rejects disk requests whose
/// charts cannot cover the circle with the required overlap margin, and
/// non-positive kappa0.
ChartAtlas build_atlas(const DomainSpec& spec);

} // namespace euler2d

#endif
