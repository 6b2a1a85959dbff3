#ifndef EULER2D_FFT_HPP
#define EULER2D_FFT_HPP

#include <complex>
#include <vector>

namespace euler2d {

/// In-place radix-2 complex FFT, n a power of two.  sign=-1 forward,
/// sign=+1 inverse (unnormalized; caller divides by n).
void fft_pow2(std::vector<std::complex<double>>& a, int sign);

bool is_pow2(int n);

/// Forward real DFT of length n (power of two): returns n/2+1 coefficients,
/// convention X_k = sum_j x_j exp(-2 pi i j k / n).
std::vector<std::complex<double>> rfft(const std::vector<double>& x);

/// Inverse of rfft (length n output), 1/n normalized.
std::vector<double> irfft(const std::vector<std::complex<double>>& X, int n);

/// Spectral derivative of a periodic sample vector on [0,1): d^order/dx^order.
/// Odd highest mode is zeroed for odd derivative orders.
std::vector<double> spectral_derivative(const std::vector<double>& x, int order);

/// DCT-I coefficients (including both endpoints), direct evaluation:
/// X_k = x_0/2 + x_{n-1}(-1)^k/2 + sum_{j=1}^{n-2} x_j cos(pi j k/(n-1)).
std::vector<double> dct1(const std::vector<double>& x);

} // namespace euler2d

#endif
