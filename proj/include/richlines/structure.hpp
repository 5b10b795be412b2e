#pragma once

#include "richlines/containment.hpp"
#include "richlines/geometry.hpp"
#include "richlines/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace richlines {

using Edge = std::pair<std::size_t, std::size_t>;  // (a index, b index)

struct PrunedGraph {
    std::vector<std::size_t> a_side;  // surviving A vertices, increasing
    std::vector<std::size_t> b_side;  // surviving B vertices, increasing
    std::vector<Edge> edges;          // surviving edges, input order
    std::size_t min_deg_a = 0;
    std::size_t min_deg_b = 0;

    // Quantities of the input graph the thresholds come from.
    std::size_t input_a = 0;
    std::size_t input_b = 0;
    std::size_t input_edges = 0;
    Rational threshold_a;  // |E| / (4 |A|)
    Rational threshold_b;  // |E| / (4 |B|)

    /// Both minimum degree bounds and |E'| >= |E| / 2.
    bool satisfies_bounds() const;
};

/// Repeatedly deletes A vertices of degree < |E|/(4|A|) and B vertices of
/// degree < |E|/(4|B|), thresholds fixed from the input graph. The result is
/// the largest subgraph meeting both thresholds, independent of deletion order.
PrunedGraph prune_bipartite(std::size_t a_count, std::size_t b_count, const std::vector<Edge>& edges);

/// Same, on the point-line incidence graph.
PrunedGraph prune_bipartite(const PointSet& points, const std::vector<Line>& lines);

struct JointReport {
    Point point;
    std::vector<IntVector> incident_directions;
    std::size_t rank = 0;
    bool is_joint = false;
};

JointReport is_joint(const Point& p, const std::vector<Line>& lines_through_p);

struct GradientComponent {
    std::size_t index = 0;
    MultiPoly poly;
    bool identically_zero = false;
    bool vanishes_on_points = false;
    std::optional<Line> nonvanishing_line;  // some input line the component is not zero on
};

struct GradientAudit {
    bool joints_consistent = true;        // grad g = 0 at every joint
    std::vector<Point> joint_failures;
    std::vector<Point> gradient_nonzero;  // points where grad g != 0 (never joints)
    std::vector<GradientComponent> components;
    // A nonzero component vanishing at all points but not on some line.
    std::optional<std::size_t> contradiction_component;
};

/// Audits grad g against the joints among `points`. Throws PreconditionError
/// if g does not vanish at every point.
GradientAudit gradient_audit(const MultiPoly& g, const PointSet& points, const std::vector<bool>& joint_flags,
                             const std::vector<Line>& lines);

enum class HyperplaneRoute { NonJoint, PlaneCollapse, SmallRFallback, DegenerateFallback, Vacuous };

std::string to_string(HyperplaneRoute r);

struct HyperplaneResult {
    HyperplaneRoute route = HyperplaneRoute::Vacuous;
    std::optional<Hyperplane> plane;
    PointSet contained;

    std::optional<Point> pivot;        // the non-joint
    std::size_t pivot_degree = 0;      // its incident pruned lines
    std::size_t count_bound = 0;       // (r - 1) * pivot_degree + 1
    bool recomputed_minimal = false;   // g was replaced by a least-degree polynomial

    std::size_t lz_lines = 0;
    std::size_t pz_points = 0;
    std::optional<PrunedGraph> pruned;
    std::optional<HypersurfaceReport> hypersurface;
};

/// Best hyperplane through d affinely independent points, by exhaustive
/// search (points grouped per anchor). If the points span less than a
/// hyperplane, returns a hyperplane through all of them.
std::pair<Hyperplane, std::size_t> exhaustive_best_hyperplane(const PointSet& points);

/// Finds a hyperplane holding many points: hypersurface pipeline, pruning,
/// then a non-joint whose lines span a hyperplane.
HyperplaneResult extract_hyperplane(const PointSet& points, const std::vector<Line>& lines, int r);

}  // namespace richlines
