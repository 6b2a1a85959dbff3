#include "euler2d/fft.hpp"

#include "euler2d/errors.hpp"

#include <cmath>

namespace euler2d {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
    const int n = static_cast<int>(a.size());
    if (!is_pow2(n)) throw Error("fft: length must be a power of two");
    // bit reversal
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const double ang = sign * kTwoPi / len;
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (int i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (int k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

std::vector<std::complex<double>> rfft(const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    std::vector<std::complex<double>> a(x.begin(), x.end());
    fft_pow2(a, -1);
    a.resize(n / 2 + 1);
    return a;
}

std::vector<double> irfft(const std::vector<std::complex<double>>& X, int n) {
    std::vector<std::complex<double>> a(n);
    for (int k = 0; k <= n / 2; ++k) a[k] = X[k];
    for (int k = 1; k < n / 2; ++k) a[n - k] = std::conj(X[k]);
    fft_pow2(a, +1);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = a[i].real() / n;
    return out;
}

std::vector<double> spectral_derivative(const std::vector<double>& x, int order) {
    const int n = static_cast<int>(x.size());
    auto X = rfft(x);
    for (int k = 0; k <= n / 2; ++k) {
        std::complex<double> f(0.0, kTwoPi * k);
        std::complex<double> m = std::pow(f, order);
        if (k == n / 2 && (order % 2) == 1) m = 0.0; // odd derivative of Nyquist mode
        X[k] *= m;
    }
    return irfft(X, n);
}

std::vector<double> dct1(const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    const int m = n - 1;
    std::vector<double> X(n, 0.0);
    for (int k = 0; k < n; ++k) {
        double s = 0.5 * x[0] + 0.5 * ((k % 2) ? -1.0 : 1.0) * x[m];
        for (int j = 1; j < m; ++j) s += x[j] * std::cos(M_PI * j * k / m);
        X[k] = s;
    }
    return X;
}

} // namespace euler2d
