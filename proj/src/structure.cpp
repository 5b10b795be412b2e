#include "richlines/structure.hpp"

#include "richlines/errors.hpp"
#include "richlines/incidence.hpp"
#include "richlines/linalg.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <map>
#include <set>

namespace richlines {

bool PrunedGraph::satisfies_bounds() const {
    if (a_side.empty() || b_side.empty()) return false;
    return 4 * input_a * min_deg_a >= input_edges && 4 * input_b * min_deg_b >= input_edges &&
           2 * edges.size() >= input_edges;
}

PrunedGraph prune_bipartite(std::size_t a_count, std::size_t b_count, const std::vector<Edge>& edges) {
    if (edges.empty()) throw PreconditionError("prune_bipartite: empty edge set");
    PrunedGraph g;
    g.input_a = a_count;
    g.input_b = b_count;
    g.input_edges = edges.size();
    g.threshold_a = Rational(static_cast<unsigned long>(edges.size()), static_cast<unsigned long>(4 * a_count));
    g.threshold_b = Rational(static_cast<unsigned long>(edges.size()), static_cast<unsigned long>(4 * b_count));
    g.threshold_a.canonicalize();
    g.threshold_b.canonicalize();

    std::vector<std::vector<std::size_t>> adj_a(a_count), adj_b(b_count);  // edge ids
    std::vector<std::size_t> deg_a(a_count, 0), deg_b(b_count, 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [a, b] = edges[e];
        if (a >= a_count || b >= b_count) throw PreconditionError("prune_bipartite: edge endpoint out of range");
        adj_a[a].push_back(e);
        adj_b[b].push_back(e);
        ++deg_a[a];
        ++deg_b[b];
    }
    // deg < E / (4 |side|)  <=>  4 |side| deg < E
    auto low_a = [&](std::size_t v) { return 4 * a_count * deg_a[v] < edges.size(); };
    auto low_b = [&](std::size_t v) { return 4 * b_count * deg_b[v] < edges.size(); };

    std::vector<bool> alive_a(a_count, true), alive_b(b_count, true), alive_e(edges.size(), true);
    std::vector<std::pair<bool, std::size_t>> work;  // (is_a, vertex)
    for (std::size_t v = 0; v < a_count; ++v) work.emplace_back(true, v);
    for (std::size_t v = 0; v < b_count; ++v) work.emplace_back(false, v);
    while (!work.empty()) {
        auto [is_a, v] = work.back();
        work.pop_back();
        if (is_a ? (!alive_a[v] || !low_a(v)) : (!alive_b[v] || !low_b(v))) continue;
        (is_a ? alive_a : alive_b)[v] = false;
        for (auto e : (is_a ? adj_a : adj_b)[v]) {
            if (!alive_e[e]) continue;
            alive_e[e] = false;
            auto [a, b] = edges[e];
            --deg_a[a];
            --deg_b[b];
            if (is_a) work.emplace_back(false, b);
            else work.emplace_back(true, a);
        }
    }
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (alive_e[e]) g.edges.push_back(edges[e]);
    g.min_deg_a = g.min_deg_b = 0;
    bool first = true;
    for (std::size_t v = 0; v < a_count; ++v)
        if (alive_a[v]) {
            g.a_side.push_back(v);
            g.min_deg_a = first ? deg_a[v] : std::min(g.min_deg_a, deg_a[v]);
            first = false;
        }
    first = true;
    for (std::size_t v = 0; v < b_count; ++v)
        if (alive_b[v]) {
            g.b_side.push_back(v);
            g.min_deg_b = first ? deg_b[v] : std::min(g.min_deg_b, deg_b[v]);
            first = false;
        }
    if (g.a_side.empty() || g.b_side.empty())
        throw InvariantBreach("pruning emptied the graph", std::to_string(edges.size()) + " input edges");
    return g;
}

PrunedGraph prune_bipartite(const PointSet& points, const std::vector<Line>& lines) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < lines.size(); ++j)
            if (incident(points[i], lines[j])) edges.emplace_back(i, j);
    return prune_bipartite(points.size(), lines.size(), edges);
}

JointReport is_joint(const Point& p, const std::vector<Line>& lines_through_p) {
    JointReport rep;
    rep.point = p;
    for (const auto& l : lines_through_p) {
        if (!incident(p, l)) throw PreconditionError("is_joint: line does not pass through the point");
        rep.incident_directions.push_back(l.direction);
    }
    rep.rank = direction_rank(rep.incident_directions);
    rep.is_joint = rep.rank == p.dim();
    return rep;
}

GradientAudit gradient_audit(const MultiPoly& g, const PointSet& points, const std::vector<bool>& joint_flags,
                             const std::vector<Line>& lines) {
    if (joint_flags.size() != points.size()) throw PreconditionError("gradient_audit: one joint flag per point");
    for (const auto& p : points)
        if (g.eval(p) != 0) throw PreconditionError("gradient_audit: g does not vanish at " + to_string(p));
    GradientAudit audit;
    auto grad = g.gradient();
    std::vector<bool> comp_vanishes(grad.size(), true);
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool nonzero = false;
        for (std::size_t c = 0; c < grad.size(); ++c)
            if (grad[c].eval(points[i]) != 0) {
                nonzero = true;
                comp_vanishes[c] = false;
            }
        if (nonzero) {
            audit.gradient_nonzero.push_back(points[i]);
            if (joint_flags[i]) {
                audit.joints_consistent = false;
                audit.joint_failures.push_back(points[i]);
            }
        }
    }
    for (std::size_t c = 0; c < grad.size(); ++c) {
        GradientComponent comp;
        comp.index = c;
        comp.poly = grad[c];
        comp.identically_zero = grad[c].is_zero();
        comp.vanishes_on_points = comp_vanishes[c];
        for (const auto& l : lines)
            if (!line_in_zero_set(l, grad[c])) {
                comp.nonvanishing_line = l;
                break;
            }
        if (!audit.contradiction_component && !comp.identically_zero && comp.vanishes_on_points &&
            comp.nonvanishing_line)
            audit.contradiction_component = c;
        audit.components.push_back(std::move(comp));
    }
    return audit;
}

std::string to_string(HyperplaneRoute r) {
    switch (r) {
        case HyperplaneRoute::NonJoint: return "non_joint";
        case HyperplaneRoute::PlaneCollapse: return "plane_collapse";
        case HyperplaneRoute::SmallRFallback: return "small_r_fallback";
        case HyperplaneRoute::DegenerateFallback: return "degenerate_fallback";
        case HyperplaneRoute::Vacuous: return "vacuous";
    }
    return "?";
}

namespace {

PointSet points_in(const Hyperplane& h, const PointSet& points) {
    PointSet out;
    for (const auto& p : points)
        if (h.contains(p)) out.push_back(p);
    return out;
}

// Calls visit(combo) for every increasing k-subset of [first, n).
template <class Visit>
void for_each_combination(std::size_t first, std::size_t n, std::size_t k, Visit&& visit) {
    if (k == 0) {
        visit(std::vector<std::size_t>{});
        return;
    }
    if (n < first + k) return;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = first + i;
    for (;;) {
        visit(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

// Hyperplane spanned by p and `dirs`, completed with standard basis vectors
// (lowest index first) when the directions span less than d - 1 dimensions.
Hyperplane hyperplane_from_directions(const Point& p, const std::vector<IntVector>& dirs) {
    const std::size_t d = p.dim();
    Matrix m(0, d);
    for (const auto& v : dirs) m.append_row(to_vector(v));
    std::size_t rk = rank(m);
    for (std::size_t i = 0; i < d && rk < d - 1; ++i) {
        Vector e(d);
        e[i] = 1;
        Matrix trial = m;
        trial.append_row(e);
        std::size_t tr = rank(trial);
        if (tr > rk) {
            m = std::move(trial);
            rk = tr;
        }
    }
    auto null = nullspace(m);
    return hyperplane_with_normal(null.front(), p);
}

enum class ScanOutcome { Found, AllJoints, Degenerate };

struct Scan {
    ScanOutcome outcome = ScanOutcome::Degenerate;
    HyperplaneResult result;
};

Scan scan_for_non_joint(const PointSet& points, const std::vector<Line>& lz, int r) {
    Scan scan;
    auto& res = scan.result;
    res.lz_lines = lz.size();
    PointSet pz;
    std::vector<Edge> edges;
    for (const auto& p : points) {
        bool on = false;
        for (std::size_t j = 0; j < lz.size(); ++j)
            if (incident(p, lz[j])) {
                if (!on) pz.push_back(p);
                on = true;
                edges.emplace_back(pz.size() - 1, j);
            }
    }
    res.pz_points = pz.size();
    if (edges.empty()) return scan;
    PrunedGraph g = prune_bipartite(pz.size(), lz.size(), edges);
    if (!g.satisfies_bounds())
        throw InvariantBreach("pruned graph violates the degree bounds", std::to_string(g.edges.size()) + " edges");
    res.pruned = g;

    std::map<std::size_t, std::vector<std::size_t>> lines_at;
    for (auto [a, b] : g.edges) lines_at[a].push_back(b);
    std::vector<std::size_t> order = g.a_side;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return pz[x] < pz[y]; });

    const std::size_t d = points.front().dim();
    bool all_joints = true;
    for (auto a : order) {
        const auto& inc = lines_at[a];
        std::vector<IntVector> dirs;
        for (auto b : inc) dirs.push_back(lz[b].direction);
        std::size_t rk = direction_rank(dirs);
        if (rk == d) continue;
        all_joints = false;
        if (inc.size() < 2) continue;
        Hyperplane h = hyperplane_from_directions(pz[a], dirs);
        for (auto b : inc)
            if (!h.contains(lz[b])) throw InvariantBreach("non-joint line outside its hyperplane", to_string(lz[b]));
        res.route = HyperplaneRoute::NonJoint;
        res.plane = h;
        res.contained = points_in(h, points);
        res.pivot = pz[a];
        res.pivot_degree = inc.size();
        res.count_bound = static_cast<std::size_t>(r - 1) * inc.size() + 1;
        if (res.contained.size() < res.count_bound)
            throw InvariantBreach("hyperplane holds fewer than (r-1)*deg+1 points", to_string(pz[a]));
        scan.outcome = ScanOutcome::Found;
        return scan;
    }
    scan.outcome = all_joints ? ScanOutcome::AllJoints : ScanOutcome::Degenerate;
    return scan;
}

}  // namespace

namespace {

using I3 = std::array<std::int64_t, 3>;

I3 primitive3(I3 v) {
    std::int64_t g = std::gcd(std::gcd(std::llabs(v[0]), std::llabs(v[1])), std::llabs(v[2]));
    if (g == 0) return v;
    for (auto& x : v) x /= g;
    for (auto x : v)
        if (x != 0) {
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
    return v;
}

// Integer coordinates after clearing a common denominator, when they are
// small enough for 64-bit cross products.
std::optional<std::vector<I3>> small_integer_coords(const PointSet& points) {
    Integer den = 1;
    for (const auto& p : points)
        for (const auto& x : p.coords) den = lcm(den, x.get_den());
    std::vector<I3> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        I3 v{};
        for (std::size_t c = 0; c < 3; ++c) {
            Integer z = p[c].get_num() * (den / p[c].get_den());
            if (abs(z) >= (Integer(1) << 28)) return std::nullopt;
            v[c] = z.get_si();
        }
        out.push_back(v);
    }
    return out;
}

// d = 3: for each anchor, group the later points into direction classes and
// collect the plane normal of every pair of classes.
std::optional<std::pair<Hyperplane, std::size_t>> best_plane_3d(const PointSet& points) {
    auto coords = small_integer_coords(points);
    if (!coords) return std::nullopt;
    const auto& q = *coords;
    const std::size_t n = q.size();
    std::size_t best_count = 0;
    std::size_t best_anchor = 0;
    I3 best_normal{};
    std::vector<std::pair<I3, std::size_t>> dirs;
    std::vector<std::pair<I3, std::uint32_t>> normals;
    for (std::size_t anchor = 0; anchor < n && n - anchor > best_count; ++anchor) {
        dirs.clear();
        for (std::size_t j = anchor + 1; j < n; ++j)
            dirs.push_back({primitive3({q[j][0] - q[anchor][0], q[j][1] - q[anchor][1], q[j][2] - q[anchor][2]}), 1});
        std::sort(dirs.begin(), dirs.end());
        std::vector<std::pair<I3, std::size_t>> classes;
        for (const auto& [v, c] : dirs) {
            if (!classes.empty() && classes.back().first == v) ++classes.back().second;
            else classes.push_back({v, 1});
        }
        if (classes.size() == 1 && classes[0].second + 1 > best_count) {
            // Everything after the anchor is collinear with it; any plane
            // through the line will do.
            const I3& u = classes[0].first;
            I3 e = std::abs(u[0]) <= std::abs(u[1]) && std::abs(u[0]) <= std::abs(u[2]) ? I3{1, 0, 0}
                   : std::abs(u[1]) <= std::abs(u[2])                                   ? I3{0, 1, 0}
                                                                                         : I3{0, 0, 1};
            best_normal = primitive3({u[1] * e[2] - u[2] * e[1], u[2] * e[0] - u[0] * e[2], u[0] * e[1] - u[1] * e[0]});
            best_count = classes[0].second + 1;
            best_anchor = anchor;
        }
        normals.clear();
        for (std::size_t a = 0; a < classes.size(); ++a)
            for (std::size_t b = a + 1; b < classes.size(); ++b) {
                const I3& u = classes[a].first;
                const I3& v = classes[b].first;
                normals.push_back({primitive3({u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                               u[0] * v[1] - u[1] * v[0]}),
                                   static_cast<std::uint32_t>(a)});
                normals.push_back({normals.back().first, static_cast<std::uint32_t>(b)});
            }
        std::sort(normals.begin(), normals.end());
        for (std::size_t i = 0; i < normals.size();) {
            std::size_t j = i;
            std::size_t count = 1;
            while (j < normals.size() && normals[j].first == normals[i].first) {
                if (j == i || normals[j].second != normals[j - 1].second) count += classes[normals[j].second].second;
                ++j;
            }
            if (count > best_count) {
                best_count = count;
                best_anchor = anchor;
                best_normal = normals[i].first;
            }
            i = j;
        }
    }
    if (best_count == 0) return std::nullopt;
    Vector normal{Rational(static_cast<long>(best_normal[0])), Rational(static_cast<long>(best_normal[1])),
                  Rational(static_cast<long>(best_normal[2]))};
    return std::make_pair(hyperplane_with_normal(normal, points[best_anchor]), best_count);
}

}  // namespace

std::pair<Hyperplane, std::size_t> exhaustive_best_hyperplane(const PointSet& points) {
    if (points.empty()) throw PreconditionError("exhaustive_best_hyperplane: no points");
    const std::size_t n = points.size();
    const std::size_t d = points.front().dim();
    if (d == 3)
        if (auto fast = best_plane_3d(points)) return *fast;
    std::optional<Hyperplane> best;
    std::size_t best_count = 0;
    for (std::size_t anchor = 0; anchor < n && n - anchor > best_count; ++anchor) {
        std::map<Hyperplane, std::set<std::size_t>> seen;
        for_each_combination(anchor + 1, n, d - 1, [&](const std::vector<std::size_t>& combo) {
            PointSet tuple{points[anchor]};
            for (auto i : combo) tuple.push_back(points[i]);
            Matrix m(0, d);
            for (std::size_t i = 1; i < tuple.size(); ++i) {
                Vector diff(d);
                for (std::size_t c = 0; c < d; ++c) diff[c] = tuple[i][c] - tuple[0][c];
                m.append_row(diff);
            }
            auto null = nullspace(m);
            if (null.size() != 1) return;
            auto& members = seen[hyperplane_with_normal(null.front(), points[anchor])];
            members.insert(combo.begin(), combo.end());
        });
        for (const auto& [h, members] : seen)
            if (members.size() + 1 > best_count) {
                best_count = members.size() + 1;
                best = h;
            }
    }
    if (!best) {
        // No d affinely independent points: everything lies in one hyperplane.
        auto h = hyperplane_through(points);
        return {*h, n};
    }
    return {*best, best_count};
}

HyperplaneResult extract_hyperplane(const PointSet& points, const std::vector<Line>& lines, int r) {
    if (r < 2) throw PreconditionError("extract_hyperplane: r must be >= 2");
    HyperplaneResult res;
    if (lines.empty() || points.empty()) return res;
    const std::size_t d = points.front().dim();

    auto fallback = [&](HyperplaneRoute route) {
        auto [h, count] = exhaustive_best_hyperplane(points);
        res.route = route;
        res.plane = h;
        res.contained = points_in(h, points);
    };

    if (d == 2) {
        std::size_t best = 0, best_count = 0;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            std::size_t c = points_on(lines[i], points);
            if (c > best_count) {
                best = i;
                best_count = c;
            }
        }
        auto h = hyperplane_through({lines[best].at(0), lines[best].at(1)});
        res.route = HyperplaneRoute::PlaneCollapse;
        res.plane = *h;
        res.contained = points_in(*h, points);
        return res;
    }

    HypersurfaceReport hs = find_rich_hypersurface(points, lines, r);
    if (hs.status == HypersurfaceStatus::SmallR) {
        res.hypersurface = std::move(hs);
        fallback(HyperplaneRoute::SmallRFallback);
        return res;
    }
    std::vector<Line> lz = hs.result.lines_contained;
    const int g_degree = hs.result.degree;
    res.hypersurface = std::move(hs);
    if (lz.empty()) {
        fallback(HyperplaneRoute::DegenerateFallback);
        return res;
    }

    Scan scan = scan_for_non_joint(points, lz, r);
    bool recomputed = false;
    if (scan.outcome == ScanOutcome::AllJoints) {
        // The joints argument needs g of least degree; redo with one.
        auto g = min_vanishing_poly(lz, std::max(g_degree, 1));
        std::vector<Line> wider;
        for (const auto& l : lines)
            if (line_in_zero_set(l, g->poly)) wider.push_back(l);
        recomputed = true;
        scan = scan_for_non_joint(points, wider, r);
        if (scan.outcome == ScanOutcome::AllJoints)
            throw AllJoints("every pruned point is a joint even for a least-degree vanishing polynomial");
    }
    auto hsr = std::move(res.hypersurface);
    res = std::move(scan.result);
    res.hypersurface = std::move(hsr);
    res.recomputed_minimal = recomputed;
    if (scan.outcome == ScanOutcome::Degenerate) {
        auto pruned = res.pruned;
        fallback(HyperplaneRoute::DegenerateFallback);
        res.pruned = pruned;
    }
    return res;
}

}  // namespace richlines
