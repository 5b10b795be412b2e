#include "../support/generators.hpp"
#include "../support/oracles.hpp"

#include "richlines/errors.hpp"
#include "richlines/incidence.hpp"
#include "richlines/instance.hpp"
#include "richlines/oracle.hpp"
#include "richlines/structure.hpp"

#include <doctest.h>

using namespace richlines;

namespace {

Line L3(std::initializer_list<long> b, std::initializer_list<long> v) {
    Vector bb, vv;
    for (auto x : b) bb.emplace_back(x);
    for (auto x : v) vv.emplace_back(x);
    return make_line(Point(bb), vv);
}

}  // namespace

TEST_CASE("prune_bipartite examples") {
    PrunedGraph star = prune_bipartite(1, 4, {{0, 0}, {0, 1}, {0, 2}, {0, 3}});
    CHECK(star.threshold_a == 1);
    CHECK(star.threshold_b == Rational(1, 4));
    CHECK(star.edges.size() == 4);
    CHECK(star.satisfies_bounds());

    PrunedGraph k22 = prune_bipartite(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(k22.edges.size() == 4);
    CHECK(k22.a_side.size() == 2);

    std::vector<Edge> dense;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 5; ++b) dense.emplace_back(a, b);
    dense.emplace_back(4, 0);
    PrunedGraph g = prune_bipartite(5, 5, dense);
    CHECK(g.a_side == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(g.edges.size() == 20);
    CHECK(g.satisfies_bounds());

    CHECK_THROWS_AS(prune_bipartite(2, 2, {}), PreconditionError);
}

TEST_CASE("prune_bipartite meets the three bounds and is order independent") {
    Rng rng(61);
    for (int it = 0; it < 300; ++it) {
        auto bg = testgen::bipartite(rng, 40);
        PrunedGraph g = prune_bipartite(bg.a, bg.b, bg.edges);
        CHECK(g.satisfies_bounds());
        CHECK(4 * bg.a * g.min_deg_a >= bg.edges.size());
        CHECK(4 * bg.b * g.min_deg_b >= bg.edges.size());
        CHECK(2 * g.edges.size() >= bg.edges.size());
        auto sweep = testoracle::sweep_prune(bg.a, bg.b, bg.edges);
        CHECK(std::set<std::size_t>(g.a_side.begin(), g.a_side.end()) == sweep.a);
        CHECK(std::set<std::size_t>(g.b_side.begin(), g.b_side.end()) == sweep.b);
        CHECK(g.edges.size() == sweep.edges);
    }
}

TEST_CASE("is_joint examples") {
    Point o{0, 0, 0};
    CHECK(is_joint(o, {L3({0, 0, 0}, {1, 0, 0}), L3({0, 0, 0}, {0, 1, 0}), L3({0, 0, 0}, {0, 0, 1})}).is_joint);
    JointReport two = is_joint(o, {L3({0, 0, 0}, {1, 0, 0}), L3({0, 0, 0}, {0, 1, 1})});
    CHECK_FALSE(two.is_joint);
    CHECK(two.rank == 2);
    CHECK(is_joint(Point{1, 1}, {make_line(Point{0, 1}, Vector{1, 0}), make_line(Point{1, 0}, Vector{0, 1})}).is_joint);
    CHECK_THROWS_AS(is_joint(o, {L3({1, 0, 0}, {0, 1, 0})}), PreconditionError);
}

TEST_CASE("gradient_audit examples") {
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    std::vector<Line> axes{make_line(Point{0, 0}, Vector{1, 0}), make_line(Point{0, 0}, Vector{0, 1})};
    GradientAudit a = gradient_audit(x * y, {Point{0, 0}, Point{2, 0}}, {true, false}, axes);
    CHECK(a.joints_consistent);
    CHECK(a.gradient_nonzero == PointSet{Point{2, 0}});

    MultiPoly plane = x - y;
    std::vector<Line> diag{make_line(Point{0, 0}, Vector{1, 1})};
    GradientAudit b = gradient_audit(plane, {Point{0, 0}, Point{3, 3}}, {false, false}, diag);
    CHECK(b.joints_consistent);
    CHECK(b.gradient_nonzero.size() == 2);
    GradientAudit c = gradient_audit(plane, {Point{0, 0}}, {true}, diag);
    CHECK_FALSE(c.joints_consistent);

    CHECK_THROWS_AS(gradient_audit(plane, {Point{1, 0}}, {false}, diag), PreconditionError);
}

TEST_CASE("gradient audit on a planted hyperplane sees no joints") {
    Instance inst = gen_planted_hyperplane(3, 120, Rational(1, 2), 9, 3);
    const Hyperplane& h = *inst.planted_plane;
    MultiPoly g = MultiPoly::affine(h.normal, -h.offset);
    PointSet on;
    for (const auto& p : inst.points)
        if (h.contains(p)) on.push_back(p);
    RichLineSet rl = enumerate_rich_lines(inst.points, 9);
    GradientAudit a = gradient_audit(g, on, std::vector<bool>(on.size(), false), rl.lines);
    CHECK(a.gradient_nonzero.size() == on.size());
    CHECK(a.joints_consistent);
    for (const auto& p : on) {
        std::vector<Line> through;
        for (const auto& l : rl.lines)
            if (incident(p, l)) through.push_back(l);
        CHECK_FALSE(is_joint(p, through).is_joint);
    }
}

TEST_CASE("extract_hyperplane on planted hyperplanes") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Instance inst = gen_planted_hyperplane(3, 300, Rational(1, 2), 10, seed);
        RichLineSet rl = enumerate_rich_lines(inst.points, 10);
        HyperplaneResult res = extract_hyperplane(inst.points, rl.lines, 10);
        REQUIRE(res.plane);
        CHECK(res.route == HyperplaneRoute::NonJoint);
        CHECK(res.contained.size() >= inst.planted_points);
        CHECK(*res.plane == *inst.planted_plane);
        CHECK(res.contained.size() >= res.count_bound);
        CHECK(res.pivot_degree >= 2);
        for (const auto& p : res.contained) CHECK(res.plane->contains(p));
        REQUIRE(res.pruned);
        CHECK(res.pruned->satisfies_bounds());
    }
}

TEST_CASE("extract_hyperplane in the plane returns the richest line") {
    PointSet pts = gen_grid(2, 4).points;
    pts.push_back(Point{10, 10});
    pts.push_back(Point{-1, -1});
    RichLineSet rl = enumerate_rich_lines(pts, 3);
    HyperplaneResult res = extract_hyperplane(pts, rl.lines, 3);
    CHECK(res.route == HyperplaneRoute::PlaneCollapse);
    CHECK(res.contained.size() == 6);
}

TEST_CASE("extract_hyperplane on the 4x4x4 grid finds an axis plane") {
    PointSet pts = gen_grid(3, 4).points;
    RichLineSet rl = enumerate_rich_lines(pts, 4);
    HyperplaneResult res = extract_hyperplane(pts, rl.lines, 4);
    CHECK(res.route == HyperplaneRoute::SmallRFallback);
    CHECK(res.contained.size() == 16);
    CHECK(oracle_best_hyperplane(pts, 64).second == 16);
}

TEST_CASE("exhaustive_best_hyperplane matches the tuple oracle") {
    Rng rng(62);
    for (int it = 0; it < 25; ++it) {
        std::size_t d = static_cast<std::size_t>(rng.uniform(2, 3));
        auto pts = testgen::distinct_points(rng, d, static_cast<std::size_t>(rng.uniform(2, 25)), 0, d == 2 ? 5 : 3);
        auto [h, c] = exhaustive_best_hyperplane(pts);
        std::size_t on = 0;
        for (const auto& p : pts) on += h.contains(p);
        CHECK(on == c);
        CHECK(c == oracle_best_hyperplane(pts).second);
    }
}

TEST_CASE("extract_hyperplane guard cases") {
    CHECK(extract_hyperplane(gen_grid(3, 2).points, {}, 3).route == HyperplaneRoute::Vacuous);
    CHECK_THROWS_AS(extract_hyperplane(gen_grid(3, 2).points, {}, 1), PreconditionError);
}
