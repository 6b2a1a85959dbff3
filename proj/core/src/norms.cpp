#include "euler2d/norms.hpp"

#include "euler2d/calculus.hpp"
#include "euler2d/fft.hpp"

#include <cmath>
#include <complex>

namespace euler2d {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double strip_norm(const Domain& d, const Field& f, double s) {
    const Grid& g = f.grid();
    const int n1 = g.n1, n2 = g.n2, m = n2 - 1;
    double acc = 0.0;
    // transform x1 (FFT) then x2 (DCT-I) per component; accumulate weighted
    // Parseval energies.  Cell measure: h1 * h2 * depth; DCT-I Parseval
    // weights are 2/m with half-weight end coefficients.
    std::vector<std::vector<std::complex<double>>> hatrows(n2);
    for (int c = 0; c < f.comps(); ++c) {
        for (int j = 0; j < n2; ++j) {
            std::vector<double> row(n1);
            for (int i = 0; i < n1; ++i) row[i] = f.at(c, i, j);
            hatrows[j] = rfft(row);
        }
        for (int k1i = 0; k1i <= n1 / 2; ++k1i) {
            // multiplicity of the real-FFT bin
            const double mult = (k1i == 0 || k1i == n1 / 2) ? 1.0 : 2.0;
            std::vector<double> colr(n2), coli(n2);
            for (int j = 0; j < n2; ++j) {
                colr[j] = hatrows[j][k1i].real();
                coli[j] = hatrows[j][k1i].imag();
            }
            auto Cr = dct1(colr);
            auto Ci = dct1(coli);
            const double k1 = kTwoPi * k1i;
            for (int k2i = 0; k2i < n2; ++k2i) {
                const double k2 = M_PI * k2i / d.depth;
                const double cend = (k2i == 0 || k2i == m) ? 0.5 : 1.0;
                const double e = (Cr[k2i] * Cr[k2i] + Ci[k2i] * Ci[k2i]) * cend * (2.0 / m);
                const double w = std::pow(1.0 + k1 * k1 + k2 * k2, s);
                acc += mult * w * e / (static_cast<double>(n1) * n1) * g.h1 * g.h2 * d.depth * n1;
            }
        }
    }
    return std::sqrt(acc);
}

double interp_integer_norms(double s, const std::vector<double>& norms) {
    const int lo = static_cast<int>(std::floor(s));
    if (std::abs(s - lo) < 1e-14) return norms[lo];
    const int hi = lo + 1;
    const double th = s - lo;
    if (norms[lo] == 0.0 || norms[hi] == 0.0) return 0.0;
    return std::pow(norms[lo], 1.0 - th) * std::pow(norms[hi], th);
}

} // namespace

double sobolev_norm(const Domain& d, const Field& f, double s) {
    if (s < 0.0 || s > 5.0) throw Error("sobolev_norm: s must lie in [0,5]");
    if (d.mode == DomainMode::periodic_strip) return strip_norm(d, f, s);
    // disk: quadrature of repeated gradients, cumulative squares
    const int top = static_cast<int>(std::ceil(s));
    std::vector<double> cum(top + 1, 0.0);
    std::vector<Field> level; // derivatives of all components at current order
    level.push_back(f);
    double total2 = 0.0;
    for (int k = 0; k <= top; ++k) {
        double lvl2 = 0.0;
        for (const Field& part : level) lvl2 += inner(d, part, part);
        total2 += lvl2;
        cum[k] = std::sqrt(total2);
        if (k == top) break;
        std::vector<Field> next;
        for (const Field& part : level)
            for (int c = 0; c < part.comps(); ++c) {
                Field comp(part.grid(), 1);
                for (int n = 0; n < part.size(); ++n) comp.atn(0, n) = part.atn(c, n);
                next.push_back(grad(d, comp));
            }
        level = std::move(next);
    }
    return interp_integer_norms(s, cum);
}

double square_sobolev_norm(const Field& f, double s) {
    if (s < 0.0 || s > 5.0) throw Error("square_sobolev_norm: s must lie in [0,5]");
    const Grid& g = f.grid();
    auto quad = [&](const Field& a) {
        double acc = 0.0;
        for (int j = 0; j < g.n2; ++j)
            for (int i = 0; i < g.n1; ++i) {
                double w1 = (!g.periodic1 && (i == 0 || i == g.n1 - 1)) ? 0.5 : 1.0;
                double w2 = (!g.periodic2 && (j == 0 || j == g.n2 - 1)) ? 0.5 : 1.0;
                for (int c = 0; c < a.comps(); ++c)
                    acc += w1 * w2 * g.h1 * g.h2 * a.at(c, i, j) * a.at(c, i, j);
            }
        return acc;
    };
    const int top = static_cast<int>(std::ceil(s));
    std::vector<double> cum(top + 1, 0.0);
    std::vector<Field> level{f};
    double total2 = 0.0;
    for (int k = 0; k <= top; ++k) {
        for (const Field& part : level) total2 += quad(part);
        cum[k] = std::sqrt(total2);
        if (k == top) break;
        std::vector<Field> next;
        for (const Field& part : level) {
            next.push_back(dref(part, 1, false));
            next.push_back(dref(part, 2, false));
        }
        level = std::move(next);
    }
    return interp_integer_norms(s, cum);
}

double boundary_sobolev_norm(const std::vector<double>& samples, double s, double curve_length) {
    const int n = static_cast<int>(samples.size());
    std::vector<std::complex<double>> hat(n / 2 + 1);
    if (is_pow2(n)) {
        hat = rfft(samples);
    } else {
        for (int k = 0; k <= n / 2; ++k) {
            std::complex<double> a(0.0, 0.0);
            for (int j = 0; j < n; ++j)
                a += samples[j] * std::exp(std::complex<double>(0.0, -kTwoPi * k * j / n));
            hat[k] = a;
        }
    }
    double acc = 0.0;
    for (int k = 0; k <= n / 2; ++k) {
        const double mult = (k == 0 || (n % 2 == 0 && k == n / 2)) ? 1.0 : 2.0;
        const double kphys = kTwoPi * k / curve_length;
        const double e = std::norm(hat[k]) / (static_cast<double>(n) * n) * curve_length;
        acc += mult * std::pow(1.0 + kphys * kphys, s) * e;
    }
    return std::sqrt(acc);
}

} // namespace euler2d
