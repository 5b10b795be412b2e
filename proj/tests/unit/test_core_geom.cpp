#include "../support/generators.hpp"
#include "../support/oracles.hpp"

#include "richlines/errors.hpp"
#include "richlines/geometry.hpp"
#include "richlines/linalg.hpp"

#include <doctest.h>

using namespace richlines;

namespace {

Point P(std::initializer_list<long> c) {
    Vector v;
    for (auto x : c) v.emplace_back(x);
    return Point(v);
}

IntVector I(std::initializer_list<long> c) {
    IntVector v;
    for (auto x : c) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK(to_string(parse_rational("-8/4")) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("line_through examples") {
    Line a = line_through(P({0, 0}), P({2, 2}));
    CHECK(a.base == P({0, 0}));
    CHECK(a.direction == I({1, 1}));

    Line b = line_through(P({0, 1}), P({0, 3}));
    CHECK(b.base == P({0, 0}));
    CHECK(b.direction == I({0, 1}));

    Line c = line_through(P({1, 0}), P({1, 2}));
    CHECK(c.base == P({1, 0}));
    CHECK(c.direction == I({0, 1}));

    CHECK_THROWS_AS(line_through(P({1, 2}), P({1, 2})), DegenerateLine);
    CHECK_THROWS_AS(line_through(P({1, 2}), P({1, 2, 3})), DimensionMismatch);
}

TEST_CASE("line base is the foot of the perpendicular") {
    testgen::Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        std::size_t d = static_cast<std::size_t>(rng.uniform(2, 4));
        Line l = testgen::random_line(rng, d);
        CHECK(dot(l.base.coords, to_vector(l.direction)) == 0);
        bool first_positive = false;
        for (const auto& x : l.direction)
            if (x != 0) {
                first_positive = x > 0;
                break;
            }
        CHECK(first_positive);
        Integer g = 0;
        for (const auto& x : l.direction) g = gcd(g, x);
        CHECK(g == 1);
    }
}

TEST_CASE("canonical form is independent of the chosen points") {
    testgen::Rng rng(12);
    for (int it = 0; it < 300; ++it) {
        std::size_t d = static_cast<std::size_t>(rng.uniform(2, 4));
        Point p = testgen::rational_point(rng, d), q = testgen::rational_point(rng, d);
        if (p == q) continue;
        Vector mid(d);
        for (std::size_t i = 0; i < d; ++i) mid[i] = (p[i] + q[i]) / 2;
        Line a = line_through(p, q);
        CHECK(a == line_through(q, p));
        CHECK(a == line_through(p, Point(mid)));
        CHECK(incident(p, a));
        CHECK(incident(q, a));
        CHECK(incident(Point(mid), a));
    }
}

TEST_CASE("incident examples") {
    Line diag = line_through(P({0, 0}), P({1, 1}));
    CHECK(incident(P({3, 3}), diag));
    CHECK_FALSE(incident(P({3, 2}), diag));
    CHECK(incident(Point{Rational(1, 2), Rational(1, 2)}, diag));
}

TEST_CASE("direction_rank examples") {
    CHECK(direction_rank({I({1, 0, 0}), I({0, 1, 0}), I({0, 0, 1})}) == 3);
    CHECK(direction_rank({I({1, 1, 0}), I({2, 2, 0})}) == 1);
    CHECK(direction_rank({I({1, 0, 0}), I({0, 1, 0}), I({1, 1, 0})}) == 2);
    CHECK(direction_rank({}) == 0);
}

TEST_CASE("direction_rank agrees with the minor oracle") {
    testgen::Rng rng(13);
    for (int it = 0; it < 400; ++it) {
        std::size_t d = static_cast<std::size_t>(rng.uniform(1, 4));
        std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 4));
        std::vector<IntVector> dirs(rows, IntVector(d));
        std::vector<Vector> as_rational(rows, Vector(d));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                long x = static_cast<long>(rng.uniform(-2, 2));
                dirs[i][j] = x;
                as_rational[i][j] = x;
            }
        CHECK(direction_rank(dirs) == testoracle::minor_rank(as_rational));
    }
}

TEST_CASE("hyperplane_through examples") {
    auto z0 = hyperplane_through({P({0, 0, 0}), P({1, 0, 0}), P({0, 1, 0})});
    REQUIRE(z0);
    CHECK(z0->normal == Vector{0, 0, 1});
    CHECK(z0->offset == 0);

    auto diag = hyperplane_through({P({0, 0}), P({1, 1})});
    REQUIRE(diag);
    CHECK(diag->normal == Vector{1, -1});
    CHECK(diag->offset == 0);

    CHECK_FALSE(hyperplane_through({P({0, 0, 0}), P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1})}));
}

TEST_CASE("hyperplane_through contains its points") {
    testgen::Rng rng(14);
    for (int it = 0; it < 100; ++it) {
        std::size_t d = static_cast<std::size_t>(rng.uniform(2, 4));
        PointSet pts;
        for (std::size_t i = 0; i + 1 < d; ++i) pts.push_back(testgen::rational_point(rng, d));
        auto h = hyperplane_through(pts);
        REQUIRE(h);
        for (const auto& p : pts) CHECK(h->contains(p));
        for (const auto& x : h->normal)
            if (x != 0) {
                CHECK(x == 1);
                break;
            }
    }
}

TEST_CASE("rref and nullspace") {
    Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    CHECK(rank(m) == 2);
    auto null = nullspace(m);
    REQUIRE(null.size() == 1);
    CHECK(null[0][2] == 1);
    for (std::size_t i = 0; i < 3; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < 3; ++j) s += m(i, j) * null[0][j];
        CHECK(s == 0);
    }
    Vector x;
    CHECK(solve_square(Matrix::from_rows({{2, 0}, {0, 4}}, 2), {1, 1}, x));
    CHECK(x == Vector{Rational(1, 2), Rational(1, 4)});
    CHECK_FALSE(solve_square(Matrix::from_rows({{1, 1}, {1, 1}}, 2), {1, 1}, x));
}

TEST_CASE("rank agrees with the minor oracle on random rational matrices") {
    testgen::Rng rng(15);
    for (int it = 0; it < 200; ++it) {
        std::size_t r = static_cast<std::size_t>(rng.uniform(1, 4)), c = static_cast<std::size_t>(rng.uniform(1, 4));
        std::vector<Vector> rows(r, Vector(c));
        for (auto& row : rows)
            for (auto& x : row) x = rng.uniform(0, 2) == 0 ? Rational(0) : testgen::rational(rng, 3, 3);
        Matrix m = Matrix::from_rows(rows, c);
        CHECK(rank(m) == testoracle::minor_rank(rows));
        CHECK(nullspace(m).size() == c - rank(m));
    }
}
