#pragma once

#include "richlines/geometry.hpp"
#include "richlines/polynomial.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace richlines {

// Signs (+1 / -1, or 0 on a zero set) of each partition factor at a point.
using SignVector = std::vector<int>;

std::string to_string(const SignVector& s);

// Product of bisecting factors f_1 .. f_s. Cells are the sign-vector classes
// of the factor list.
struct PartitionPoly {
    std::vector<MultiPoly> factors;
    std::vector<unsigned> lift_degrees;   // t_j used to build f_j
    int product_degree = 0;               // sum of deg f_j
    int target_degree = 0;                // m

    std::size_t size() const { return factors.size(); }
    MultiPoly product() const;
    SignVector signs(const Point& p) const;
};

struct CellMap {
    std::map<SignVector, PointSet> cells;  // only nonempty classes
    PointSet boundary;                     // points with some zero sign

    std::size_t max_cell_size() const;
    std::size_t point_count() const;
};

struct CrossingProfile {
    Line line;
    bool contained = false;        // line lies in Z(product)
    int intervals = 0;             // open intervals of the line off Z(product)
    int cells_touched = 0;         // distinct sign classes realized on those intervals
    std::map<SignVector, int> points_per_cell;
};

// Affine functional y -> coeffs . y + constant on R^D.
struct AffineFunctional {
    Vector coeffs;
    Rational constant;

    Rational operator()(const Vector& y) const;
};

/// All monomials of degree 1..t of p, graded lexicographic order.
Point veronese_lift(const Point& p, unsigned t);

/// Number of coordinates of the degree-t lift of R^d: C(t + d, d) - 1.
std::size_t lift_dimension(std::size_t d, unsigned t);

/// Least t with lift_dimension(d, t) >= parts.
unsigned lift_degree_for(std::size_t d, std::size_t parts);

/// True iff both open sides of h hold at most floor(|set| / 2) points of `set`.
bool bisects(const AffineFunctional& h, const std::vector<Vector>& set);

/// Hyperplane bisecting every set simultaneously (at most D sets in R^D).
///
/// The sets are projected generically onto R^k (k = number of nonempty sets).
/// Candidate cuts pass through one point from each of the first k - 1 sets,
/// taken deepest-first; the pencil of hyperplanes through those points is then
/// swept exactly, which finds a cut through any point of the last set or
/// through none. Throws CutNotFound when every projection and tuple fails.
AffineFunctional ham_sandwich_cut(const std::vector<std::vector<Vector>>& sets, std::size_t D);

/// Iterated halving: f_j bisects all 2^(j-1) current parts in the degree-t_j
/// Veronese lift. Stops before the sum of lift degrees would exceed m.
PartitionPoly build_partition(const PointSet& points, int m);

CellMap assign_cells(const PointSet& points, const PartitionPoly& pp);

CrossingProfile crossing_profile(const Line& l, const PartitionPoly& pp, const PointSet& points);

/// Replays the construction and checks that each f_j left at most
/// floor(|part| / 2) points of every part strictly on each side. Returns a
/// witness description on failure.
std::optional<std::string> check_halving(const PointSet& points, const PartitionPoly& pp);

/// Largest integer m with r/8 < m < r/4; nullopt when r <= 8.
std::optional<int> pipeline_degree(int r);

}  // namespace richlines
