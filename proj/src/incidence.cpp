#include "richlines/incidence.hpp"

#include "richlines/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace richlines {

RichLineSet enumerate_rich_lines(const PointSet& points, int r) {
    if (r < 2) throw PreconditionError("enumerate_rich_lines: r must be >= 2");
    {
        std::set<Point> seen(points.begin(), points.end());
        if (seen.size() != points.size()) throw PreconditionError("enumerate_rich_lines: duplicate points");
    }
    const std::size_t n = points.size();
    std::vector<std::pair<Line, std::size_t>> found;
    for (std::size_t i = 0; i < n; ++i) {
        std::map<IntVector, std::vector<std::size_t>> by_direction;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Vector diff(points[i].dim());
            for (std::size_t c = 0; c < diff.size(); ++c) diff[c] = points[j][c] - points[i][c];
            by_direction[primitive_direction(diff)].push_back(j);
        }
        for (const auto& [dir, members] : by_direction) {
            if (members.size() + 1 < static_cast<std::size_t>(r)) continue;
            // Report each line once, from its lowest-index point.
            if (members.front() < i) continue;
            found.emplace_back(make_line(points[i], to_vector(dir)), members.size() + 1);
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    RichLineSet out;
    out.r = r;
    for (auto& [l, c] : found) {
        out.lines.push_back(std::move(l));
        out.counts.push_back(c);
    }
    return out;
}

std::size_t points_on(const Line& l, const PointSet& points) {
    return static_cast<std::size_t>(
        std::count_if(points.begin(), points.end(), [&](const Point& p) { return incident(p, l); }));
}

std::size_t incidence_count(const PointSet& points, const std::vector<Line>& lines) {
    std::size_t total = 0;
    for (const auto& l : lines) total += points_on(l, points);
    return total;
}

std::map<SignVector, std::size_t> cell_hits(const Line& l, const CellMap& cm) {
    std::map<SignVector, std::size_t> hits;
    for (const auto& [sv, pts] : cm.cells) {
        std::size_t c = points_on(l, pts);
        if (c) hits[sv] = c;
    }
    return hits;
}

CellLineSplit classify_cell_lines(const std::vector<Line>& lines, const CellMap& cm, int max_cells) {
    CellLineSplit split;
    for (const auto& l : lines) {
        auto hits = cell_hits(l, cm);
        bool cell = std::any_of(hits.begin(), hits.end(), [](const auto& kv) { return kv.second >= 2; });
        if (cell) {
            split.l_cell.push_back(l);
        } else {
            if (hits.size() > static_cast<std::size_t>(max_cells))
                throw InvariantBreach("l_rest line meets more cells than the crossing bound allows",
                                      to_string(l));
            split.l_rest.push_back(l);
        }
        split.in_cell.push_back(cell);
        split.cell_hits.push_back(std::move(hits));
    }
    return split;
}

long long multiplicity(const Line& l, const CellMap& cm) {
    long long k = 0;
    for (const auto& [sv, c] : cell_hits(l, cm)) k += binomial(static_cast<long long>(c), 2);
    return k;
}

long long pair_count(const CellMap& cm) {
    long long total = 0;
    for (const auto& [sv, pts] : cm.cells) total += binomial(static_cast<long long>(pts.size()), 2);
    return total;
}

Rational cauchy_schwarz_floor(const Line& l, const CellMap& cm, int m) {
    if (m < 1) throw PreconditionError("cauchy_schwarz_floor: m must be >= 1");
    auto hits = cell_hits(l, cm);
    if (hits.size() > static_cast<std::size_t>(m))
        throw InvariantBreach("line meets more than m cells", to_string(l));
    Rational s = 0;
    for (const auto& [sv, c] : hits) s += static_cast<unsigned long>(c);
    return (s * s / m - s) / 2;
}

}  // namespace richlines
