#include "../support/generators.hpp"

#include "richlines/errors.hpp"
#include "richlines/incidence.hpp"
#include "richlines/instance.hpp"
#include "richlines/partition.hpp"

#include <doctest.h>

#include <set>

using namespace richlines;

namespace {

std::vector<Vector> vecs(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vector> out;
    for (auto r : rows) {
        Vector v;
        for (auto x : r) v.emplace_back(x);
        out.push_back(v);
    }
    return out;
}

PartitionPoly single(const MultiPoly& f) {
    PartitionPoly pp;
    pp.factors = {f};
    pp.lift_degrees = {static_cast<unsigned>(f.degree())};
    pp.product_degree = f.degree();
    pp.target_degree = f.degree();
    return pp;
}

std::size_t ceil_div_pow2(std::size_t n, std::size_t s) { return (n + (std::size_t{1} << s) - 1) >> s; }

void check_partition(const PointSet& pts, int m, Rng& rng) {
    PartitionPoly pp = build_partition(pts, m);
    REQUIRE(pp.size() >= 1);
    CHECK(pp.product_degree <= m);
    int deg_sum = 0;
    for (std::size_t j = 0; j < pp.size(); ++j) {
        CHECK_FALSE(pp.factors[j].is_zero());
        CHECK(pp.factors[j].degree() <= static_cast<int>(pp.lift_degrees[j]));
        CHECK(pp.lift_degrees[j] == lift_degree_for(pts.front().dim(), std::size_t{1} << j));
        deg_sum += static_cast<int>(pp.lift_degrees[j]);
    }
    CHECK(deg_sum == pp.product_degree);
    CHECK_FALSE(check_halving(pts, pp));

    CellMap cm = assign_cells(pts, pp);
    CHECK(cm.point_count() == pts.size());
    CHECK(cm.max_cell_size() <= ceil_div_pow2(pts.size(), pp.size()));
    CHECK(cm.cells.size() <= std::min<std::size_t>(std::size_t{1} << pp.size(), pts.size()));
    for (const auto& [sv, cell] : cm.cells)
        for (const auto& p : cell) CHECK(pp.signs(p) == sv);
    for (const auto& p : cm.boundary) {
        auto s = pp.signs(p);
        CHECK(std::find(s.begin(), s.end(), 0) != s.end());
    }

    // Bezout: random lines and lines through pairs of input points.
    std::vector<Line> probes;
    for (int i = 0; i < 5; ++i) probes.push_back(testgen::random_line(rng, pts.front().dim()));
    for (std::size_t i = 0; i + 1 < pts.size() && probes.size() < 15; i += 3) probes.push_back(line_through(pts[i], pts[i + 1]));
    for (const auto& l : probes) {
        CrossingProfile cp = crossing_profile(l, pp, pts);
        if (cp.contained) {
            CHECK(cp.cells_touched == 0);
            continue;
        }
        CHECK(cp.cells_touched <= pp.product_degree + 1);
        CHECK(cp.intervals <= pp.product_degree + 1);
        for (const auto& f : pp.factors) {
            UniPoly u = f.restrict_to_line(l);
            if (u.is_zero()) continue;
            Rational b = cauchy_bound(u);
            CHECK(sturm_count(u, -b, b) <= f.degree());
        }
    }
}

}  // namespace

TEST_CASE("veronese_lift examples") {
    CHECK(veronese_lift(Point{3}, 2) == Point{3, 9});
    CHECK(veronese_lift(Point{5, 7}, 1) == Point{5, 7});
    CHECK(veronese_lift(Point{1, 2}, 2) == Point{1, 2, 1, 2, 4});
    CHECK(lift_dimension(2, 2) == 5);
    CHECK(lift_dimension(3, 1) == 3);
    CHECK(lift_degree_for(2, 1) == 1);
    CHECK(lift_degree_for(2, 4) == 2);
    CHECK(lift_degree_for(2, 8) == 3);
    CHECK(lift_degree_for(3, 4) == 2);
}

TEST_CASE("ham_sandwich_cut examples") {
    auto a = vecs({{1, 0}, {-1, 0}}), b = vecs({{0, 1}, {0, -1}});
    AffineFunctional h = ham_sandwich_cut({a, b}, 2);
    CHECK(bisects(h, a));
    CHECK(bisects(h, b));

    auto one = vecs({{1}, {2}, {3}});
    AffineFunctional g = ham_sandwich_cut({one}, 1);
    CHECK(bisects(g, one));
    CHECK(g(Vector{2}) == 0);

    auto lo = vecs({{0, 0}, {1, 0}, {2, 0}}), hi = vecs({{0, 1}, {1, 1}, {2, 1}});
    AffineFunctional v = ham_sandwich_cut({lo, hi}, 2);
    CHECK(bisects(v, lo));
    CHECK(bisects(v, hi));
}

TEST_CASE("ham_sandwich_cut bisects random families") {
    Rng rng(31);
    for (int it = 0; it < 60; ++it) {
        std::size_t D = static_cast<std::size_t>(rng.uniform(1, 5));
        std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(D)));
        std::vector<std::vector<Vector>> sets(k);
        for (auto& s : sets) {
            auto n = rng.uniform(1, 12);
            for (std::int64_t i = 0; i < n; ++i) s.push_back(testgen::int_point(rng, D, -4, 4).coords);
        }
        AffineFunctional h = ham_sandwich_cut(sets, D);
        for (const auto& s : sets) CHECK(bisects(h, s));
    }
}

TEST_CASE("ham_sandwich_cut with many sets") {
    Rng rng(47);
    for (int it = 0; it < 6; ++it) {
        const std::size_t D = it % 2 ? 9 : 8;
        std::vector<std::vector<Vector>> sets(8);
        for (auto& s : sets) {
            auto n = rng.uniform(10, 25);
            for (std::int64_t i = 0; i < n; ++i) s.push_back(testgen::int_point(rng, D, -30, 30).coords);
        }
        AffineFunctional h = ham_sandwich_cut(sets, D);
        for (const auto& s : sets) CHECK(bisects(h, s));
    }
}

TEST_CASE("build_partition examples") {
    PointSet two{Point{0, 0}, Point{5, 1}};
    PartitionPoly pp = build_partition(two, 10);
    CHECK(pp.size() >= 1);
    CHECK(assign_cells(two, pp).max_cell_size() <= 1);

    Rng rng(32);
    PointSet sixteen = testgen::distinct_points(rng, 2, 16, -50, 50);
    PartitionPoly p16 = build_partition(sixteen, 7);
    CellMap c16 = assign_cells(sixteen, p16);
    CHECK(c16.max_cell_size() <= ceil_div_pow2(16, p16.size()));
    if (p16.size() == 4) CHECK(c16.max_cell_size() <= 1);

    PointSet grid = gen_grid(2, 3).points;
    PartitionPoly p9 = build_partition(grid, 2);
    CHECK(p9.size() == 2);
    CHECK(p9.factors[0].degree() <= 1);
    CHECK(p9.factors[1].degree() <= 1);
    CHECK(assign_cells(grid, p9).max_cell_size() <= 3);

    CHECK_THROWS_AS(build_partition(grid, 0), PreconditionError);
    CHECK_THROWS_AS(build_partition({}, 2), PreconditionError);
}

TEST_CASE("assign_cells examples") {
    MultiPoly x = MultiPoly::variable(2, 0);
    PartitionPoly pp = single(x);
    CellMap cm = assign_cells({Point{0, 1}, Point{1, 1}, Point{2, 5}}, pp);
    CHECK(cm.boundary == PointSet{Point{0, 1}});
    REQUIRE(cm.cells.size() == 1);
    CHECK(cm.cells.begin()->second.size() == 2);
}

TEST_CASE("crossing_profile examples") {
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    PartitionPoly circle = single(x * x + y * y - MultiPoly::constant(2, 1));
    Line axis = make_line(Point{0, 0}, Vector{1, 0});
    CrossingProfile cp = crossing_profile(axis, circle, {Point{0, 0}, Point{3, 0}, Point{-3, 0}, Point{1, 0}});
    CHECK_FALSE(cp.contained);
    CHECK(cp.intervals == 3);
    CHECK(cp.cells_touched == 2);
    CHECK(cp.points_per_cell.at(SignVector{1}) == 2);
    CHECK(cp.points_per_cell.at(SignVector{-1}) == 1);

    PartitionPoly diag = single(x - y);
    CrossingProfile in = crossing_profile(make_line(Point{0, 0}, Vector{1, 1}), diag, {});
    CHECK(in.contained);
    CHECK(in.cells_touched == 0);

    PartitionPoly two;
    two.factors = {x - y * Rational(3) + MultiPoly::constant(2, 1), x * Rational(2) + y - MultiPoly::constant(2, 4)};
    two.lift_degrees = {1, 1};
    two.product_degree = 2;
    two.target_degree = 2;
    Rng rng(33);
    for (int i = 0; i < 30; ++i) {
        CrossingProfile p = crossing_profile(testgen::random_line(rng, 2), two, {});
        if (!p.contained) CHECK(p.cells_touched <= 3);
    }
}

TEST_CASE("partition invariants on random point sets") {
    Rng rng(34);
    for (int it = 0; it < 12; ++it) {
        std::size_t d = static_cast<std::size_t>(rng.uniform(2, 3));
        std::size_t n = static_cast<std::size_t>(rng.uniform(5, 60));
        int m = static_cast<int>(rng.uniform(1, 4));
        PointSet pts = testgen::distinct_points(rng, d, n, -30, 30);
        check_partition(pts, m, rng);
    }
}

TEST_CASE("partition invariants on grids") {
    Rng rng(35);
    check_partition(gen_grid(2, 5).points, 3, rng);
    check_partition(gen_grid(3, 3).points, 2, rng);
    check_partition(gen_grid(2, 7).points, 4, rng);
}

TEST_CASE("pipeline_degree picks r/8 < m < r/4") {
    CHECK_FALSE(pipeline_degree(3));
    CHECK_FALSE(pipeline_degree(8));
    CHECK(pipeline_degree(9) == 2);
    CHECK(pipeline_degree(12) == 2);
    CHECK(pipeline_degree(16) == 3);
    CHECK(pipeline_degree(17) == 4);
    for (int r = 9; r < 200; ++r) {
        auto m = pipeline_degree(r);
        REQUIRE(m);
        CHECK(8 * *m > r);
        CHECK(4 * *m < r);
        CHECK(4 * (*m + 1) >= r);
    }
}
