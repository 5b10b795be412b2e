#pragma once

#include "richlines/geometry.hpp"
#include "richlines/polynomial.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace richlines {

// A point set plus whatever ground truth its generator planted.
struct Instance {
    std::size_t dim = 0;
    PointSet points;
    std::string kind = "file";

    std::optional<Hyperplane> planted_plane;
    std::size_t planted_points = 0;        // points of the planted plane
    std::string planted_surface;           // display form of the planted polynomial
    std::vector<Line> planted_lines;
};

/// The integer grid {0..k-1}^d.
Instance gen_grid(std::size_t d, std::size_t k);

/// n distinct integer points in [0, range]^d.
Instance gen_random(std::size_t d, std::size_t n, std::int64_t range, std::uint64_t seed);

/// floor(fraction * n) points in a random rational hyperplane, laid out as a
/// (d-1)-dimensional grid (extra in-plane points if the grid falls short);
/// the rest at random integer positions off the plane.
Instance gen_planted_hyperplane(std::size_t d, std::size_t n, const Rational& fraction, int r, std::uint64_t seed);

/// `line_count` lines inside a known surface of the given degree, r points on
/// each. degree 1: a random hyperplane. degree 2 with d = 3: the quadric
/// z = xy (lines x = a, z = a y). Otherwise a product of `degree` random
/// hyperplanes with the lines dealt out round robin.
Instance gen_planted_hypersurface(std::size_t d, int degree, std::size_t line_count, int r, std::uint64_t seed);

/// Text format: `dim d`, then one point per line as space separated rationals
/// `p/q`. `#` starts a comment; `#! key value` comments carry ground truth.
void write_instance(std::ostream& os, const Instance& inst);
Instance read_instance(std::istream& is);
Instance read_instance_file(const std::string& path);

}  // namespace richlines
