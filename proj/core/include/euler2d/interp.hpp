#ifndef EULER2D_INTERP_HPP
#define EULER2D_INTERP_HPP

#include "euler2d/field.hpp"

#include <vector>

namespace euler2d {

/// Out-of-range index policy per axis for interpolation stencils.
enum class Wrap {
    periodic, ///< index modulo n
    shift,    ///< shift the 4-point stencil inside the axis (exact on cubics)
    polar     ///< axis-2 high side crosses the pole: (i, n2-1+m) -> (i+n1/2, n2-m)
};

/// Cubic-Lagrange tensor (bicubic) interpolation of all components of f at
/// reference-square points (u,v).  Exact on bicubic polynomials.  Points
/// outside the grid hull (beyond a half-cell margin on shift axes) raise an
/// error listing the offending points.
/// Returns values in point-major order: out[p*comps + c].
std::vector<double> interp_bicubic(const Field& f, const std::vector<Vec2>& pts,
                                   Wrap wrap1, Wrap wrap2);

double interp_bicubic_one(const Field& f, int c, double u, double v,
                          Wrap wrap1, Wrap wrap2);

} // namespace euler2d

#endif
