#include "richlines/geometry.hpp"

#include "richlines/errors.hpp"
#include "richlines/linalg.hpp"

#include <sstream>

namespace richlines {

Point Line::at(const Rational& t) const {
    Vector c(base.coords);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += t * direction[i];
    return Point(std::move(c));
}

bool Hyperplane::contains(const Point& p) const { return dot(normal, p.coords) == offset; }

bool Hyperplane::contains(const Line& l) const {
    return contains(l.base) && dot(normal, to_vector(l.direction)) == 0;
}

IntVector primitive_direction(const Vector& v) {
    Integer lcm_den = 1;
    for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    IntVector out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].get_num() * (lcm_den / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g == 0) throw DegenerateLine("zero direction vector");
    int lead = 0;
    for (const auto& x : out)
        if (x != 0) {
            lead = sgn(x);
            break;
        }
    if (lead < 0) g = -g;
    for (auto& x : out) x /= g;
    return out;
}

Vector to_vector(const IntVector& v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

Line make_line(const Point& base, const Vector& direction) {
    IntVector dir = primitive_direction(direction);
    Vector dv = to_vector(dir);
    Rational t = dot(base.coords, dv) / dot(dv, dv);
    Vector foot(base.coords);
    for (std::size_t i = 0; i < foot.size(); ++i) foot[i] -= t * dv[i];
    return Line{Point(std::move(foot)), std::move(dir)};
}

Line line_through(const Point& p, const Point& q) {
    if (p.dim() != q.dim()) throw DimensionMismatch("line_through: points of different dimension");
    if (p == q) throw DegenerateLine("line_through: equal points " + to_string(p));
    Vector diff(p.dim());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = q[i] - p[i];
    return make_line(p, diff);
}

bool incident(const Point& p, const Line& l) {
    if (p.dim() != l.dim()) throw DimensionMismatch("incident: dimension mismatch");
    std::optional<Rational> t;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        Rational delta = p[i] - l.base[i];
        if (l.direction[i] == 0) {
            if (delta != 0) return false;
            continue;
        }
        Rational ti = delta / Rational(l.direction[i]);
        if (!t) t = ti;
        else if (*t != ti) return false;
    }
    return true;
}

std::size_t direction_rank(const std::vector<IntVector>& dirs) {
    if (dirs.empty()) return 0;
    Matrix m(0, dirs.front().size());
    for (const auto& d : dirs) m.append_row(to_vector(d));
    return rank(m);
}

Hyperplane hyperplane_with_normal(const Vector& normal, const Point& p) {
    Vector n(normal);
    std::size_t lead = 0;
    while (lead < n.size() && n[lead] == 0) ++lead;
    if (lead == n.size()) throw PreconditionError("hyperplane normal is zero");
    Rational s = n[lead];
    for (auto& x : n) x /= s;
    Rational off = dot(n, p.coords);
    return Hyperplane{std::move(n), std::move(off)};
}

std::optional<Hyperplane> hyperplane_through(const PointSet& points) {
    if (points.empty()) throw PreconditionError("hyperplane_through: empty point list");
    const std::size_t d = points.front().dim();
    Matrix m(0, d);
    for (std::size_t i = 1; i < points.size(); ++i) {
        Vector diff(d);
        for (std::size_t j = 0; j < d; ++j) diff[j] = points[i][j] - points[0][j];
        m.append_row(diff);
    }
    auto null = nullspace(m);
    if (null.empty()) return std::nullopt;
    return hyperplane_with_normal(null.front(), points.front());
}

std::string to_string(const Point& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << to_string(p[i]);
    os << ')';
    return os.str();
}

std::string to_string(const Line& l) {
    std::ostringstream os;
    os << to_string(l.base) << "+t(";
    for (std::size_t i = 0; i < l.direction.size(); ++i) os << (i ? "," : "") << l.direction[i].get_str();
    os << ')';
    return os.str();
}

std::string to_string(const Hyperplane& h) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < h.normal.size(); ++i) os << (i ? "," : "") << to_string(h.normal[i]);
    os << "].x=" << to_string(h.offset);
    return os.str();
}

}  // namespace richlines
