#ifndef EULER2D_MOLLIFIER_HPP
#define EULER2D_MOLLIFIER_HPP

#include <vector>

namespace euler2d {

/// Even, nonnegative, unit-mass profile supported in (-1,1) with a dilation
/// parameter.  Discrete kernels are renormalized to exact unit mass after
/// sampling; symmetric sampling keeps the first discrete moment exactly zero.
struct Mollifier {
    enum class Profile { bump, quartic };
    Profile profile = Profile::bump;

    /// Continuous normalized profile value.
    double rho(double x) const;

    struct Kernel {
        int r = 0;                // offsets -r..r
        std::vector<double> w;    // 2r+1 weights, sum exactly 1
        double weight(int off) const { return w[off + r]; }
        double second_moment(double grid_h) const {
            double m = 0.0;
            for (int j = -r; j <= r; ++j) m += weight(j) * (j * grid_h) * (j * grid_h);
            return m;
        }
    };

    /// Discrete kernel for grid spacing h and dilation delta.  Collapses to
    /// the identity kernel when delta < h (sub-grid dilation).
    Kernel kernel(double grid_h, double delta) const;
};

} // namespace euler2d

#endif
