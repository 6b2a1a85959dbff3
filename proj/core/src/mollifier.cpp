#include "euler2d/mollifier.hpp"

#include "euler2d/errors.hpp"

#include <cmath>

namespace euler2d {

namespace {

double bump_raw(double x) {
    const double t = x * x;
    if (t >= 1.0) return 0.0;
    return std::exp(1.0 / (t - 1.0));
}

// integral of bump_raw over (-1,1), computed once by composite Simpson on a
// fine fixed grid (integrand is C^infty with flat tails; this is accurate to
// well below 1e-14)
double bump_mass() {
    static const double mass = [] {
        const int n = 1 << 16;
        const double h = 2.0 / n;
        double s = bump_raw(-1.0) + bump_raw(1.0);
        for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * bump_raw(-1.0 + i * h);
        return s * h / 3.0;
    }();
    return mass;
}

} // namespace

double Mollifier::rho(double x) const {
    if (profile == Profile::bump) return bump_raw(x) / bump_mass();
    const double t = 1.0 - x * x;
    if (t <= 0.0) return 0.0;
    return (15.0 / 16.0) * t * t;
}

Mollifier::Kernel Mollifier::kernel(double grid_h, double delta) const {
    if (delta <= 0.0) throw Error("mollifier: dilation must be positive");
    Kernel k;
    int r = static_cast<int>(std::ceil(delta / grid_h)) - 1;
    if (r < 0) r = 0;
    k.r = r;
    k.w.resize(2 * r + 1);
    double sum = 0.0;
    for (int j = -r; j <= r; ++j) {
        const double v = rho(j * grid_h / delta);
        k.w[j + r] = v;
        sum += v;
    }
    for (double& v : k.w) v /= sum;
    return k;
}

} // namespace euler2d
