#include "richlines/oracle.hpp"

#include "richlines/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

namespace richlines {

namespace {

Vector diff(const Point& a, const Point& b) {
    Vector v(a.dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
    return v;
}

bool parallel(const Vector& u, const Vector& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

// Laplace expansion; only used for d <= 4 or so.
Rational det(const std::vector<Vector>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Rational out = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<Vector> minor;
        for (std::size_t r = 1; r < n; ++r) {
            Vector row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        Rational term = m[0][c] * det(minor);
        out += (c % 2 == 0) ? term : Rational(-term);
    }
    return out;
}

// Generalized cross product of d - 1 vectors in R^d.
Vector cross(const std::vector<Vector>& vs, std::size_t d) {
    Vector n(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Vector> m;
        for (const auto& v : vs) {
            Vector row;
            for (std::size_t k = 0; k < d; ++k)
                if (k != i) row.push_back(v[k]);
            m.push_back(std::move(row));
        }
        n[i] = det(m);
        if (i % 2 == 1) n[i] = -n[i];
    }
    return n;
}

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap)
        throw OracleTooLarge("oracle limited to " + std::to_string(cap) + " points, got " + std::to_string(n));
}

}  // namespace

std::size_t oracle_cap() {
    if (const char* env = std::getenv("RICHLINES_ORACLE_CAP")) {
        try {
            return static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
        }
    }
    return kDefaultOracleCap;
}

std::set<std::vector<std::size_t>> oracle_rich_lines(const PointSet& points, int r, std::size_t cap) {
    check_cap(points.size(), cap);
    std::set<std::vector<std::size_t>> out;
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector u = diff(points[j], points[i]);
            std::vector<std::size_t> on;
            for (std::size_t k = 0; k < n; ++k)
                if (parallel(u, diff(points[k], points[i]))) on.push_back(k);
            if (on.size() >= static_cast<std::size_t>(std::max(r, 2))) out.insert(on);
        }
    return out;
}

std::pair<Hyperplane, std::size_t> oracle_best_hyperplane(const PointSet& points, std::size_t cap) {
    check_cap(points.size(), cap);
    if (points.empty()) throw PreconditionError("oracle_best_hyperplane: no points");
    const std::size_t n = points.size();
    const std::size_t d = points.front().dim();
    std::optional<std::pair<Hyperplane, std::size_t>> best;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    while (n >= d) {
        std::vector<Vector> vs;
        for (std::size_t i = 1; i < d; ++i) vs.push_back(diff(points[idx[i]], points[idx[0]]));
        Vector normal = cross(vs, d);
        std::size_t lead = 0;
        while (lead < d && normal[lead] == 0) ++lead;
        if (lead < d) {
            Rational s = normal[lead];
            for (auto& x : normal) x /= s;
            Rational off = 0;
            for (std::size_t k = 0; k < d; ++k) off += normal[k] * points[idx[0]][k];
            std::size_t count = 0;
            for (const auto& p : points) {
                Rational v = 0;
                for (std::size_t k = 0; k < d; ++k) v += normal[k] * p[k];
                if (v == off) ++count;
            }
            if (!best || count > best->second) best.emplace(Hyperplane{normal, off}, count);
        }
        // next combination
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == n - d + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t k = i; k < d; ++k) idx[k] = idx[k - 1] + 1;
    }
    if (best) return *best;
    // Fewer than d points, or all of them in a lower dimensional flat.
    auto h = hyperplane_through(points);
    if (!h) throw PreconditionError("oracle_best_hyperplane: points span full space without a spanning tuple");
    return {*h, n};
}

}  // namespace richlines
