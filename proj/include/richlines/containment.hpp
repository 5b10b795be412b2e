#pragma once

#include "richlines/geometry.hpp"
#include "richlines/incidence.hpp"
#include "richlines/linalg.hpp"
#include "richlines/partition.hpp"
#include "richlines/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace richlines {

struct VanishingResult {
    MultiPoly poly;
    int degree = -1;
    std::vector<Line> lines_contained;
};

/// True iff f vanishes identically on l.
bool line_in_zero_set(const Line& l, const MultiPoly& f);

/// Interpolation system for "a degree <= D polynomial vanishes at base + t *
/// direction, t = 0..D, on every line". Columns follow monomials(d, 0, D).
Matrix vanishing_system(const std::vector<Line>& lines, unsigned degree);

/// Nonzero polynomial of least degree (<= max_degree) vanishing on every line.
/// The representative is the nullspace vector of the smallest free column of
/// the RREF, so its leading (highest grlex) coefficient is 1.
std::optional<VanishingResult> min_vanishing_poly(const std::vector<Line>& lines, int max_degree);

enum class HypersurfaceStatus { Ok, SmallR, Vacuous };

std::string to_string(HypersurfaceStatus s);

struct HypersurfaceReport {
    HypersurfaceStatus status = HypersurfaceStatus::Vacuous;
    int r = 0;
    int m = 0;
    PartitionPoly partition;
    CellMap cells;
    CellLineSplit split;

    // Zero set of the partition product, with the lines of L inside it.
    VanishingResult partition_surface;
    // Least-degree surface through all of L with degree < r/4, when one exists.
    std::optional<VanishingResult> minimal_surface;
    // The reported hypersurface: whichever of the two contains more lines.
    VanishingResult result;
    std::string source;  // "partition" or "minimal"

    long long pair_count = 0;
    long long multiplicity_sum = 0;     // over l_cell
    Rational l_cell_constant;           // |l_cell| * r^(d+1) / n^2
};

/// Runs the partition argument on (points, lines): picks m with r/8 < m < r/4,
/// partitions, splits the lines, certifies every l_rest line inside Z(f) and
/// checks the counting estimates. Throws InvariantBreach with a witness if any
/// of them fail.
HypersurfaceReport find_rich_hypersurface(const PointSet& points, const std::vector<Line>& lines, int r);

}  // namespace richlines
