#include "euler2d/field.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace euler2d {

void Field::validate() const {
    for (double v : data_)
        if (!std::isfinite(v)) throw Error("field: non-finite entry");
}

Field& Field::operator+=(const Field& o) {
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Field& Field::operator-=(const Field& o) {
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Field& Field::operator*=(double a) {
    for (double& v : data_) v *= a;
    return *this;
}

void Field::axpy(double a, const Field& o) {
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += a * o.data_[k];
}

double Field::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

Field operator+(Field a, const Field& b) { a += b; return a; }
Field operator-(Field a, const Field& b) { a -= b; return a; }
Field operator*(double a, Field f) { f *= a; return f; }

void write_snapshot(std::ostream& os, const Field& f, double time) {
    const Grid& g = f.grid();
    char buf[512];
    std::snprintf(buf, sizeof buf, "%d %d %.17g %.17g %d %d %d %d %.17g\n",
                  g.n1, g.n2, g.h1, g.h2, g.periodic1 ? 1 : 0,
                  g.periodic2 ? 1 : 0, g.staggered2 ? 1 : 0, f.comps(), time);
    os << buf;
    for (int n = 0; n < f.size(); ++n) {
        for (int c = 0; c < f.comps(); ++c) {
            std::snprintf(buf, sizeof buf, "%s%.17g", c ? " " : "", f.atn(c, n));
            os << buf;
        }
        os << '\n';
    }
}

Field read_snapshot(std::istream& is, double* time) {
    int n1, n2, p1, p2, s2, comps;
    double h1, h2, t;
    if (!(is >> n1 >> n2 >> h1 >> h2 >> p1 >> p2 >> s2 >> comps >> t))
        throw Error("snapshot: malformed header");
    Grid g = Grid::make(n1, n2, p1 != 0, p2 != 0, s2 != 0);
    Field f(g, comps);
    for (int n = 0; n < f.size(); ++n)
        for (int c = 0; c < comps; ++c)
            if (!(is >> f.atn(c, n))) throw Error("snapshot: truncated data");
    f.validate();
    if (time) *time = t;
    return f;
}

} // namespace euler2d
