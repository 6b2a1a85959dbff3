#ifndef EULER2D_GRID_HPP
#define EULER2D_GRID_HPP

#include "euler2d/errors.hpp"

namespace euler2d {

/// Uniform tensor grid on a reference square.
///
/// Spacing is 1/n on periodic axes and 1/(n-1) otherwise.  The disk-mode
/// radial axis is half-cell staggered (h = 1/(n - 1/2)) so that no node sits
/// on the polar-coordinate singularity; the innermost flux face then lands
/// exactly on the pole where the metric coefficient vanishes.
struct Grid {
    int n1 = 0, n2 = 0;
    double h1 = 0.0, h2 = 0.0;
    bool periodic1 = false, periodic2 = false;
    bool staggered2 = false; // axis-2 nodes at j*h2 with h2 = 1/(n2-1/2)
    int chart_id = -1;

    static Grid make(int n1, int n2, bool periodic1, bool periodic2,
                     bool staggered2 = false, int chart_id = -1) {
        if (n1 < 8 || n2 < 8) throw Error("grid: node counts must be >= 8");
        Grid g;
        g.n1 = n1; g.n2 = n2;
        g.periodic1 = periodic1; g.periodic2 = periodic2;
        g.staggered2 = staggered2;
        g.chart_id = chart_id;
        g.h1 = periodic1 ? 1.0 / n1 : 1.0 / (n1 - 1);
        if (periodic2) g.h2 = 1.0 / n2;
        else if (staggered2) g.h2 = 1.0 / (n2 - 0.5);
        else g.h2 = 1.0 / (n2 - 1);
        return g;
    }

    int size() const { return n1 * n2; }
    int idx(int i, int j) const { return j * n1 + i; }
    double x1(int i) const { return i * h1; }
    double x2(int j) const { return j * h2; }

    bool operator==(const Grid& o) const {
        return n1 == o.n1 && n2 == o.n2 && periodic1 == o.periodic1 &&
               periodic2 == o.periodic2 && staggered2 == o.staggered2;
    }
};

} // namespace euler2d

#endif
