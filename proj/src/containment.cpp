#include "richlines/containment.hpp"

#include "richlines/errors.hpp"

#include <algorithm>

namespace richlines {

bool line_in_zero_set(const Line& l, const MultiPoly& f) { return f.restrict_to_line(l).is_zero(); }

Matrix vanishing_system(const std::vector<Line>& lines, unsigned degree) {
    if (lines.empty()) throw PreconditionError("vanishing_system: no lines");
    const std::size_t d = lines.front().dim();
    auto monos = monomials(d, 0, degree);
    Matrix m(0, monos.size());
    for (const auto& l : lines)
        for (unsigned t = 0; t <= degree; ++t) {
            Point p = l.at(t);
            Vector row;
            row.reserve(monos.size());
            for (const auto& e : monos) row.push_back(monomial_value(e, p));
            m.append_row(row);
        }
    return m;
}

std::optional<VanishingResult> min_vanishing_poly(const std::vector<Line>& lines, int max_degree) {
    if (lines.empty()) throw PreconditionError("min_vanishing_poly: no lines");
    if (max_degree < 1) throw PreconditionError("min_vanishing_poly: max_degree must be >= 1");
    const std::size_t d = lines.front().dim();
    for (int deg = 1; deg <= max_degree; ++deg) {
        auto null = nullspace(vanishing_system(lines, static_cast<unsigned>(deg)));
        if (null.empty()) continue;
        auto monos = monomials(d, 0, static_cast<unsigned>(deg));
        MultiPoly g(d);
        for (std::size_t i = 0; i < monos.size(); ++i) g.add_term(monos[i], null.front()[i]);
        for (const auto& l : lines)
            if (!line_in_zero_set(l, g))
                throw InvariantBreach("interpolated polynomial misses a line", to_string(l));
        return VanishingResult{g, g.degree(), lines};
    }
    return std::nullopt;
}

std::string to_string(HypersurfaceStatus s) {
    switch (s) {
        case HypersurfaceStatus::Ok: return "ok";
        case HypersurfaceStatus::SmallR: return "small_r";
        case HypersurfaceStatus::Vacuous: return "vacuous";
    }
    return "?";
}

HypersurfaceReport find_rich_hypersurface(const PointSet& points, const std::vector<Line>& lines, int r) {
    HypersurfaceReport rep;
    rep.r = r;
    if (r < 2) throw PreconditionError("find_rich_hypersurface: r must be >= 2");
    for (const auto& l : lines)
        if (points_on(l, points) < static_cast<std::size_t>(r))
            throw PreconditionError("find_rich_hypersurface: line with fewer than r points: " + to_string(l));
    if (lines.empty()) {
        rep.status = HypersurfaceStatus::Vacuous;
        return rep;
    }
    auto m = pipeline_degree(r);
    if (!m) {
        rep.status = HypersurfaceStatus::SmallR;
        return rep;
    }
    rep.status = HypersurfaceStatus::Ok;
    rep.m = *m;
    rep.partition = build_partition(points, *m);
    rep.cells = assign_cells(points, rep.partition);
    const int crossing_bound = rep.partition.product_degree + 1;
    rep.split = classify_cell_lines(lines, rep.cells, crossing_bound);

    MultiPoly f = rep.partition.product();
    rep.partition_surface.poly = f;
    rep.partition_surface.degree = f.degree();
    for (const auto& l : lines)
        if (line_in_zero_set(l, f)) rep.partition_surface.lines_contained.push_back(l);

    // Lines with at most one point per cell have >= r - m > deg f points on
    // Z(f), so f vanishes on them.
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (rep.split.in_cell[i]) continue;
        const Line& l = lines[i];
        std::size_t in_cells = 0;
        for (const auto& [sv, c] : rep.split.cell_hits[i]) in_cells += c;
        std::size_t on_zero = points_on(l, points) - in_cells;
        if (on_zero + static_cast<std::size_t>(*m) < static_cast<std::size_t>(r))
            throw InvariantBreach("l_rest line with fewer than r - m points on Z(f)", to_string(l));
        if (!line_in_zero_set(l, f))
            throw InvariantBreach("l_rest line not contained in Z(f)", to_string(l));
    }

    rep.pair_count = pair_count(rep.cells);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        long long k = 0;
        for (const auto& [sv, c] : rep.split.cell_hits[i]) k += binomial(static_cast<long long>(c), 2);
        int cs_cells = std::max<int>(*m, static_cast<int>(rep.split.cell_hits[i].size()));
        if (Rational(static_cast<long>(k)) < cauchy_schwarz_floor(lines[i], rep.cells, cs_cells))
            throw InvariantBreach("multiplicity below the Cauchy-Schwarz floor", to_string(lines[i]));
        if (rep.split.in_cell[i]) rep.multiplicity_sum += k;
    }
    if (rep.pair_count < rep.multiplicity_sum)
        throw InvariantBreach("cell pair count below the l_cell multiplicity sum",
                              std::to_string(rep.pair_count) + " < " + std::to_string(rep.multiplicity_sum));

    const std::size_t d = points.front().dim();
    const std::size_t n = points.size();
    Integer rpow = 1;
    for (std::size_t i = 0; i < d + 1; ++i) rpow *= r;
    rep.l_cell_constant = Rational(Integer(static_cast<unsigned long>(rep.split.l_cell.size())) * rpow) /
                          Rational(Integer(static_cast<unsigned long>(n)) * Integer(static_cast<unsigned long>(n)));

    const int max_degree = (r - 1) / 4;
    rep.minimal_surface = min_vanishing_poly(lines, max_degree);
    if (rep.minimal_surface &&
        rep.minimal_surface->lines_contained.size() > rep.partition_surface.lines_contained.size()) {
        rep.result = *rep.minimal_surface;
        rep.source = "minimal";
    } else {
        rep.result = rep.partition_surface;
        rep.source = "partition";
    }
    if (4 * rep.result.degree >= r)
        throw InvariantBreach("hypersurface degree not below r/4", std::to_string(rep.result.degree));
    return rep;
}

}  // namespace richlines
