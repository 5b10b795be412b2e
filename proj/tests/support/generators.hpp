#pragma once

// Hand-rolled random generators for property tests. All draws go through the
// library's counter-based Rng so failures reproduce from the seed alone.

#include "richlines/geometry.hpp"
#include "richlines/polynomial.hpp"
#include "richlines/rng.hpp"
#include "richlines/structure.hpp"

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace testgen {

using namespace richlines;

inline Rational rational(Rng& rng, std::int64_t num = 10, std::int64_t den = 4) {
    Rational q(static_cast<long>(rng.uniform(-num, num)), static_cast<unsigned long>(rng.uniform(1, den)));
    q.canonicalize();
    return q;
}

inline Point rational_point(Rng& rng, std::size_t d, std::int64_t num = 10, std::int64_t den = 4) {
    Vector v(d);
    for (auto& x : v) x = rational(rng, num, den);
    return Point(std::move(v));
}

inline Point int_point(Rng& rng, std::size_t d, std::int64_t lo, std::int64_t hi) {
    Vector v(d);
    for (auto& x : v) x = static_cast<long>(rng.uniform(lo, hi));
    return Point(std::move(v));
}

// n distinct integer points in [lo, hi]^d.
inline PointSet distinct_points(Rng& rng, std::size_t d, std::size_t n, std::int64_t lo, std::int64_t hi) {
    long double sites = 1;
    for (std::size_t i = 0; i < d; ++i) sites *= static_cast<long double>(hi - lo + 1);
    if (static_cast<long double>(n) > sites) throw std::invalid_argument("distinct_points: too few lattice sites");
    std::set<Point> seen;
    PointSet out;
    while (out.size() < n) {
        Point p = int_point(rng, d, lo, hi);
        if (seen.insert(p).second) out.push_back(p);
    }
    return out;
}

inline MultiPoly multipoly(Rng& rng, std::size_t d, unsigned max_degree, std::size_t terms = 6) {
    MultiPoly f(d);
    auto monos = monomials(d, 0, max_degree);
    for (std::size_t i = 0; i < terms; ++i)
        f.add_term(monos[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(monos.size()) - 1))],
                   rational(rng, 5, 3));
    return f;
}

// Integer coefficients in [-c, c], exact degree `degree`.
inline UniPoly unipoly(Rng& rng, int degree, std::int64_t c = 5) {
    Vector v(static_cast<std::size_t>(degree) + 1);
    for (auto& x : v) x = static_cast<long>(rng.uniform(-c, c));
    while (v.back() == 0) v.back() = static_cast<long>(rng.uniform(-c, c));
    return UniPoly(std::move(v));
}

inline Line random_line(Rng& rng, std::size_t d) {
    for (;;) {
        Point p = rational_point(rng, d), q = rational_point(rng, d);
        if (!(p == q)) return line_through(p, q);
    }
}

struct Bipartite {
    std::size_t a = 0;
    std::size_t b = 0;
    std::vector<Edge> edges;
};

// Random bipartite graph with sides <= max_side and at least one edge.
inline Bipartite bipartite(Rng& rng, std::size_t max_side) {
    Bipartite g;
    g.a = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_side)));
    g.b = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_side)));
    const auto density = rng.uniform(1, 100);
    for (std::size_t i = 0; i < g.a; ++i)
        for (std::size_t j = 0; j < g.b; ++j)
            if (rng.uniform(1, 100) <= density) g.edges.emplace_back(i, j);
    if (g.edges.empty())
        g.edges.emplace_back(static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(g.a) - 1)),
                             static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(g.b) - 1)));
    return g;
}

}  // namespace testgen
