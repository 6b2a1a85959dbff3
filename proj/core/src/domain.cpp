#include "euler2d/domain.hpp"

#include <cmath>

namespace euler2d {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Domain Domain::make_strip(int n1, int n2, double depth) {
    if (depth <= 0.0) throw GeometryError("strip depth must be positive");
    Domain d;
    d.mode = DomainMode::periodic_strip;
    d.depth = depth;
    d.grid = Grid::make(n1, n2, /*periodic1=*/true, /*periodic2=*/false);
    if (!((n1 & (n1 - 1)) == 0)) throw GeometryError("strip mode requires power-of-two n1 (spectral axis)");
    return d;
}

Domain Domain::make_disk(int n1, int n2, double R) {
    if (R <= 0.0) throw GeometryError("disk radius must be positive");
    if (n1 % 2 != 0) throw GeometryError("disk mode requires even n1 (pole reflection)");
    Domain d;
    d.mode = DomainMode::disk;
    d.R = R;
    d.grid = Grid::make(n1, n2, /*periodic1=*/true, /*periodic2=*/false, /*staggered2=*/true);
    return d;
}

Vec2 Domain::map(double u, double v) const {
    if (mode == DomainMode::periodic_strip) return {u, depth * v};
    const double r = R * (1.0 - v);
    return {r * std::cos(kTwoPi * u), r * std::sin(kTwoPi * u)};
}

Mat2 Domain::map_jacobian(double u, double v) const {
    Mat2 J;
    if (mode == DomainMode::periodic_strip) {
        J.m[0][0] = 1.0; J.m[1][1] = depth;
        return J;
    }
    const double r = R * (1.0 - v);
    const double c = std::cos(kTwoPi * u), s = std::sin(kTwoPi * u);
    J.m[0][0] = -kTwoPi * r * s; J.m[0][1] = -R * c;
    J.m[1][0] = kTwoPi * r * c;  J.m[1][1] = -R * s;
    return J;
}

double Domain::map_det(double u, double v) const {
    if (mode == DomainMode::periodic_strip) return depth;
    return kTwoPi * R * R * (1.0 - v);
}

Vec2 Domain::inv_map(Vec2 p) const {
    if (mode == DomainMode::periodic_strip) return {p.x - std::floor(p.x), p.y / depth};
    const double r = p.norm();
    double u = std::atan2(p.y, p.x) / kTwoPi;
    u -= std::floor(u);
    return {u, 1.0 - r / R};
}

double Domain::boundary_param_speed() const {
    return mode == DomainMode::disk ? kTwoPi * R : 1.0;
}

double Domain::quad_weight(int i, int j) const {
    (void)i;
    double w1 = grid.h1; // periodic axis
    double w2 = grid.h2;
    if (grid.staggered2) {
        if (j == 0) w2 *= 0.5;
    } else {
        if (j == 0 || j == grid.n2 - 1) w2 *= 0.5;
    }
    return w1 * w2 * map_det(grid.x1(i), grid.x2(j));
}

double Domain::volume() const {
    double v = 0.0;
    for (int j = 0; j < grid.n2; ++j)
        for (int i = 0; i < grid.n1; ++i) v += quad_weight(i, j);
    return v;
}

std::vector<double> Domain::interp_at_physical(const Field& f, const std::vector<Vec2>& phys) const {
    std::vector<Vec2> ref(phys.size());
    for (size_t k = 0; k < phys.size(); ++k) ref[k] = inv_map(phys[k]);
    return interp_bicubic(f, ref, Wrap::periodic, wrap2_high());
}

std::vector<double> Domain::boundary_row(const Field& f) const {
    const int j = boundary_j();
    std::vector<double> row(static_cast<size_t>(f.comps()) * grid.n1);
    for (int c = 0; c < f.comps(); ++c)
        for (int i = 0; i < grid.n1; ++i) row[static_cast<size_t>(c) * grid.n1 + i] = f.at(c, i, j);
    return row;
}

void Domain::set_boundary_row(Field& f, const std::vector<double>& row) const {
    const int j = boundary_j();
    for (int c = 0; c < f.comps(); ++c)
        for (int i = 0; i < grid.n1; ++i) f.at(c, i, j) = row[static_cast<size_t>(c) * grid.n1 + i];
}

} // namespace euler2d
