#ifndef EULER2D_CALCULUS_HPP
#define EULER2D_CALCULUS_HPP

#include "euler2d/domain.hpp"

namespace euler2d {

/// Reference-square derivative of every component of f along an axis.
/// Periodic axes use either the 4th-order centered stencil or spectral
/// differentiation (power-of-two length).  Non-periodic axes use the centered
/// 4th-order interior stencil with 4th-order one-sided closures; with
/// polar_ghost the axis-2 high side instead reads values reflected across the
/// pole (i -> i + n1/2, j -> 2 n2 - 1 - j).
Field dref(const Field& f, int axis, bool spectral, bool polar_ghost = false);

/// Physical-space calculus on Omega (chains through grad Theta).
Field grad(const Domain& d, const Field& scalar);     // -> vector
Field jacobian(const Domain& d, const Field& vec);    // -> matrix dv_i/dx_j
Field divergence(const Domain& d, const Field& vec);  // -> scalar
Field curl2d(const Domain& d, const Field& vec);      // -> scalar

Field dref1(const Domain& d, const Field& f);
Field dref2(const Domain& d, const Field& f);

/// L2 inner product / norm with the physical volume measure.
double inner(const Domain& d, const Field& a, const Field& b);
double l2_norm(const Domain& d, const Field& a);
double integral(const Domain& d, const Field& scalar);

} // namespace euler2d

#endif
