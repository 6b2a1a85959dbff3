#ifndef EULER2D_FIELD_HPP
#define EULER2D_FIELD_HPP

#include "euler2d/grid.hpp"

#include <array>
#include <cmath>
#include <iosfwd>
#include <vector>

namespace euler2d {

struct Vec2 {
    double x = 0.0, y = 0.0;
    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double a) const { return {a * x, a * y}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::sqrt(x * x + y * y); }
};
inline Vec2 operator*(double a, Vec2 v) { return v * a; }

/// Row-major 2x2 matrix, m[r][c].
struct Mat2 {
    std::array<std::array<double, 2>, 2> m{{{0, 0}, {0, 0}}};
    static Mat2 identity() { Mat2 a; a.m[0][0] = a.m[1][1] = 1.0; return a; }
    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    Mat2 inverse() const {
        const double d = det();
        Mat2 a;
        a.m[0][0] = m[1][1] / d;  a.m[0][1] = -m[0][1] / d;
        a.m[1][0] = -m[1][0] / d; a.m[1][1] = m[0][0] / d;
        return a;
    }
    /// Cofactor matrix: cof(F)[i][j] = (-1)^{i+j} minor_ij, so F^{-1} = cof(F)^T / det F.
    Mat2 cof() const {
        Mat2 a;
        a.m[0][0] = m[1][1];  a.m[0][1] = -m[1][0];
        a.m[1][0] = -m[0][1]; a.m[1][1] = m[0][0];
        return a;
    }
    Mat2 transpose() const {
        Mat2 a;
        a.m[0][0] = m[0][0]; a.m[0][1] = m[1][0];
        a.m[1][0] = m[0][1]; a.m[1][1] = m[1][1];
        return a;
    }
    Vec2 apply(Vec2 v) const {
        return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
    }
    Vec2 applyT(Vec2 v) const {
        return {m[0][0] * v.x + m[1][0] * v.y, m[0][1] * v.x + m[1][1] * v.y};
    }
    Mat2 mul(const Mat2& b) const {
        Mat2 a;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                a.m[i][j] = m[i][0] * b.m[0][j] + m[i][1] * b.m[1][j];
        return a;
    }
    double frob(const Mat2& b) const {
        return m[0][0] * b.m[0][0] + m[0][1] * b.m[0][1] +
               m[1][0] * b.m[1][0] + m[1][1] * b.m[1][1];
    }
    double max_abs() const {
        return std::max(std::max(std::abs(m[0][0]), std::abs(m[0][1])),
                        std::max(std::abs(m[1][0]), std::abs(m[1][1])));
    }
};

/// Discrete field on a reference grid with 1 (scalar), 2 (vector) or 4
/// (matrix, row-major) components.  Component blocks are stored contiguously
/// in node-major order.  Entries are validated finite on demand; operations
/// that build fields call validate() before handing them out.
class Field {
  public:
    Field() = default;
    Field(const Grid& g, int comps) : grid_(g), comps_(comps), data_(static_cast<size_t>(g.size()) * comps, 0.0) {
        if (comps != 1 && comps != 2 && comps != 4) throw Error("field: component count must be 1, 2 or 4");
    }

    const Grid& grid() const { return grid_; }
    int comps() const { return comps_; }
    int size() const { return grid_.size(); }

    double& at(int c, int i, int j) { return data_[static_cast<size_t>(c) * grid_.size() + grid_.idx(i, j)]; }
    double at(int c, int i, int j) const { return data_[static_cast<size_t>(c) * grid_.size() + grid_.idx(i, j)]; }
    double& atn(int c, int n) { return data_[static_cast<size_t>(c) * grid_.size() + n]; }
    double atn(int c, int n) const { return data_[static_cast<size_t>(c) * grid_.size() + n]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }
    const double* comp(int c) const { return data_.data() + static_cast<size_t>(c) * grid_.size(); }
    double* comp(int c) { return data_.data() + static_cast<size_t>(c) * grid_.size(); }

    Vec2 vec(int i, int j) const { return {at(0, i, j), at(1, i, j)}; }
    void set_vec(int i, int j, Vec2 v) { at(0, i, j) = v.x; at(1, i, j) = v.y; }
    Mat2 mat(int i, int j) const {
        Mat2 a;
        a.m[0][0] = at(0, i, j); a.m[0][1] = at(1, i, j);
        a.m[1][0] = at(2, i, j); a.m[1][1] = at(3, i, j);
        return a;
    }
    void set_mat(int i, int j, const Mat2& a) {
        at(0, i, j) = a.m[0][0]; at(1, i, j) = a.m[0][1];
        at(2, i, j) = a.m[1][0]; at(3, i, j) = a.m[1][1];
    }

    void validate() const;

    Field& operator+=(const Field& o);
    Field& operator-=(const Field& o);
    Field& operator*=(double a);
    /// this += a*o
    void axpy(double a, const Field& o);

    double max_abs() const;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(double a, Field f);

/// Serialize as: one header line "n1 n2 h1 h2 p1 p2 s2 comps time", then one
/// line per node (node-major) with all components in decimal text.
void write_snapshot(std::ostream& os, const Field& f, double time);
Field read_snapshot(std::istream& is, double* time = nullptr);

} // namespace euler2d

#endif
