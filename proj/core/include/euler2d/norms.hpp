#ifndef EULER2D_NORMS_HPP
#define EULER2D_NORMS_HPP

#include "euler2d/domain.hpp"

#include <vector>

namespace euler2d {

/// Discrete H^s norm of a field over Omega, s in [0,5].
///
/// strip: ||f||_s^2 = sum_modes (1 + k1^2 + k2^2)^s E_mode via the tensor
/// Fourier (x1) x DCT-I (x2) transform with physical wavenumbers
/// k1 = 2 pi m, k2 = pi j / depth; exact Parseval at s=0.
/// disk: integer orders by quadrature of repeated physical gradients;
/// fractional orders by log-convex interpolation between neighbors.
double sobolev_norm(const Domain& d, const Field& f, double s);

/// H^s norm surrogate on a plain (chart) reference square: integer orders by
/// quadrature of 4th-order reference derivatives, fractional by log-convex
/// interpolation.
double square_sobolev_norm(const Field& f, double s);

/// Spectral H^s norm of samples of a periodic function on a closed curve of
/// the given length (uniform parameter grid, power-of-two size not required;
/// uses the direct DFT when length is not a power of two).
double boundary_sobolev_norm(const std::vector<double>& samples, double s, double curve_length);

} // namespace euler2d

#endif
