#pragma once

#include "richlines/geometry.hpp"

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace richlines {

constexpr std::size_t kDefaultOracleCap = 60;

/// Cap from RICHLINES_ORACLE_CAP, or kDefaultOracleCap.
std::size_t oracle_cap();

/// Brute force: for every pair, the set of indices collinear with it (2x2
/// minors of difference vectors). Returns each maximal collinear set of size
/// >= r once. Throws OracleTooLarge when n exceeds the cap.
std::set<std::vector<std::size_t>> oracle_rich_lines(const PointSet& points, int r, std::size_t cap = oracle_cap());

/// Brute force over hyperplanes spanned by d-tuples of points; returns the
/// largest point count. Points spanning less than a hyperplane are counted as
/// lying on one.
std::pair<Hyperplane, std::size_t> oracle_best_hyperplane(const PointSet& points, std::size_t cap = oracle_cap());

}  // namespace richlines
