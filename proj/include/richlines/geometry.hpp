#pragma once

#include "richlines/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace richlines {

struct Point {
    Vector coords;

    Point() = default;
    explicit Point(Vector c) : coords(std::move(c)) {}
    Point(std::initializer_list<Rational> c) : coords(c) {}

    std::size_t dim() const { return coords.size(); }
    const Rational& operator[](std::size_t i) const { return coords[i]; }

    friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
    friend bool operator<(const Point& a, const Point& b) { return a.coords < b.coords; }
};

using PointSet = std::vector<Point>;

// A line in canonical form: `direction` is a primitive integer vector whose
// first nonzero entry is positive, `base` is the foot of the perpendicular from
// the origin. Two Line values compare equal iff they are the same point set.
struct Line {
    Point base;
    IntVector direction;

    std::size_t dim() const { return base.dim(); }
    Point at(const Rational& t) const;

    friend bool operator==(const Line& a, const Line& b) {
        return a.direction == b.direction && a.base == b.base;
    }
    // Orders by direction first, then base.
    friend bool operator<(const Line& a, const Line& b) {
        if (a.direction != b.direction) return a.direction < b.direction;
        return a.base < b.base;
    }
};

// normal . x = offset, with the first nonzero entry of normal equal to 1.
struct Hyperplane {
    Vector normal;
    Rational offset;

    bool contains(const Point& p) const;
    bool contains(const Line& l) const;

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

/// Primitive integer vector parallel to a nonzero rational vector, first
/// nonzero entry positive.
IntVector primitive_direction(const Vector& v);

Vector to_vector(const IntVector& v);

/// Canonical line through two distinct points. Throws DegenerateLine if p == q.
Line line_through(const Point& p, const Point& q);

/// Canonical form of the line {base + t * direction}.
Line make_line(const Point& base, const Vector& direction);

bool incident(const Point& p, const Line& l);

/// Rank over Q of the matrix whose rows are `dirs`. Empty input has rank 0.
std::size_t direction_rank(const std::vector<IntVector>& dirs);

/// Hyperplane through all `points` if their affine hull has dimension < d.
std::optional<Hyperplane> hyperplane_through(const PointSet& points);

/// Hyperplane through `p` orthogonal to `normal`, normalized.
Hyperplane hyperplane_with_normal(const Vector& normal, const Point& p);

std::string to_string(const Point& p);
std::string to_string(const Line& l);
std::string to_string(const Hyperplane& h);

}  // namespace richlines
