#pragma once

// Brute-force oracles used only by tests. None of them call the library's
// elimination, canonical forms or Sturm code.

#include "richlines/geometry.hpp"
#include "richlines/polynomial.hpp"
#include "richlines/structure.hpp"

#include <cstdlib>
#include <set>
#include <vector>

namespace testoracle {

using namespace richlines;

inline Rational det(const std::vector<Vector>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Rational out = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<Vector> minor;
        for (std::size_t r = 1; r < n; ++r) {
            Vector row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        Rational t = m[0][c] * det(minor);
        if (c % 2) out -= t;
        else out += t;
    }
    return out;
}

// Rank as the size of the largest nonzero square minor.
inline std::size_t minor_rank(const std::vector<Vector>& rows) {
    if (rows.empty()) return 0;
    const std::size_t nr = rows.size(), nc = rows[0].size();
    for (std::size_t k = std::min(nr, nc); k > 0; --k) {
        std::vector<std::size_t> ri(k), ci(k);
        for (std::size_t rmask = 0; rmask < (1u << nr); ++rmask) {
            if (static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(rmask))) != k) continue;
            for (std::size_t cmask = 0; cmask < (1u << nc); ++cmask) {
                if (static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(cmask))) != k) continue;
                std::vector<Vector> m;
                for (std::size_t r = 0; r < nr; ++r) {
                    if (!(rmask >> r & 1)) continue;
                    Vector row;
                    for (std::size_t c = 0; c < nc; ++c)
                        if (cmask >> c & 1) row.push_back(rows[r][c]);
                    m.push_back(row);
                }
                if (det(m) != 0) return k;
            }
        }
    }
    return 0;
}

// Distinct real roots of an integer polynomial found as sign changes on the
// grid k / 1000, |k| <= 1000 * bound. Evaluated in 128-bit integers scaled by
// 1000^deg; exact for squarefree inputs whose roots are 1/1000 apart.
inline int grid_root_count(const std::vector<long>& coeffs, long bound) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    __int128 scale[16];
    scale[0] = 1;
    for (int i = 1; i <= deg; ++i) scale[i] = scale[i - 1] * 1000;
    auto value = [&](long k) {
        __int128 v = 0, kp = 1;
        for (int i = 0; i <= deg; ++i) {
            v += static_cast<__int128>(coeffs[static_cast<std::size_t>(i)]) * kp * scale[deg - i];
            kp *= k;
        }
        return v;
    };
    int count = 0, last = 0;
    for (long k = -1000 * bound; k <= 1000 * bound; ++k) {
        __int128 v = value(k);
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// Fixed point of "delete every vertex below threshold" by repeated full
// sweeps over the edge list.
struct SweepPrune {
    std::set<std::size_t> a, b;
    std::size_t edges = 0;
};

inline SweepPrune sweep_prune(std::size_t na, std::size_t nb, const std::vector<Edge>& edges) {
    std::vector<bool> alive_a(na, true), alive_b(nb, true);
    const std::size_t e = edges.size();
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::size_t> da(na, 0), db(nb, 0);
        for (auto [x, y] : edges)
            if (alive_a[x] && alive_b[y]) ++da[x], ++db[y];
        for (std::size_t v = 0; v < na; ++v)
            if (alive_a[v] && 4 * na * da[v] < e) alive_a[v] = false, changed = true;
        for (std::size_t v = 0; v < nb; ++v)
            if (alive_b[v] && 4 * nb * db[v] < e) alive_b[v] = false, changed = true;
    }
    SweepPrune out;
    for (std::size_t v = 0; v < na; ++v)
        if (alive_a[v]) out.a.insert(v);
    for (std::size_t v = 0; v < nb; ++v)
        if (alive_b[v]) out.b.insert(v);
    for (auto [x, y] : edges)
        if (alive_a[x] && alive_b[y]) ++out.edges;
    return out;
}

}  // namespace testoracle
