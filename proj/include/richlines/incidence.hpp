#pragma once

#include "richlines/geometry.hpp"
#include "richlines/partition.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace richlines {

struct RichLineSet {
    std::vector<Line> lines;          // sorted by (direction, base)
    std::vector<std::size_t> counts;  // incidences of lines[i] with the point set
    int r = 2;

    std::size_t size() const { return lines.size(); }
};

// Lines with at least two points in one cell go to l_cell, the rest to l_rest.
struct CellLineSplit {
    std::vector<Line> l_cell;
    std::vector<Line> l_rest;
    // |l ∩ P_i| for every cell the line meets, keyed like CellMap::cells.
    std::vector<std::map<SignVector, std::size_t>> cell_hits;  // parallel to the input lines
    std::vector<bool> in_cell;                                  // parallel to the input lines
};

/// Every distinct line holding at least r of the points. Points must be distinct.
RichLineSet enumerate_rich_lines(const PointSet& points, int r);

/// Number of points of `points` on `l`.
std::size_t points_on(const Line& l, const PointSet& points);

/// Sum over lines of the number of points on each line.
std::size_t incidence_count(const PointSet& points, const std::vector<Line>& lines);

std::map<SignVector, std::size_t> cell_hits(const Line& l, const CellMap& cm);

/// Splits lines by the l_cell rule. For each l_rest line the total number of
/// cell points on it is at most `max_cells`; otherwise InvariantBreach.
CellLineSplit classify_cell_lines(const std::vector<Line>& lines, const CellMap& cm, int max_cells);

/// k_l = sum_i C(|l ∩ P_i|, 2).
long long multiplicity(const Line& l, const CellMap& cm);

/// sum_i C(|P_i|, 2).
long long pair_count(const CellMap& cm);

/// (1/2) (S^2 / m - S) with S = sum_i |l ∩ P_i|. Throws InvariantBreach when
/// the line has points in more than m cells.
Rational cauchy_schwarz_floor(const Line& l, const CellMap& cm, int m);

}  // namespace richlines
