#include "richlines/containment.hpp"
#include "richlines/errors.hpp"
#include "richlines/incidence.hpp"
#include "richlines/instance.hpp"
#include "richlines/oracle.hpp"
#include "richlines/partition.hpp"
#include "richlines/structure.hpp"
#include "richlines/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace richlines;

namespace {

// Rationals cross the boundary as fractions.Fraction (ints and "p/q" strings
// are accepted on the way in).
Rational to_rational(py::handle h) { return parse_rational(py::str(h).cast<std::string>()); }

py::object to_fraction(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_string(q));
}

py::list to_py(const Vector& v) {
    py::list out;
    for (const auto& x : v) out.append(to_fraction(x));
    return out;
}

py::list to_py(const IntVector& v) {
    py::list out;
    for (const auto& x : v) out.append(py::int_(py::str(to_string(x))));
    return out;
}

PointSet to_points(const py::iterable& rows) {
    PointSet pts;
    for (auto row : rows) {
        Vector v;
        for (auto x : row) v.push_back(to_rational(x));
        if (!pts.empty() && v.size() != pts.front().dim())
            throw DimensionMismatch("points of different dimensions");
        pts.emplace_back(std::move(v));
    }
    return pts;
}

py::list to_py(const PointSet& pts) {
    py::list out;
    for (const auto& p : pts) out.append(to_py(p.coords));
    return out;
}

py::dict to_py(const Line& l) {
    py::dict d;
    d["base"] = to_py(l.base.coords);
    d["direction"] = to_py(l.direction);
    return d;
}

py::dict to_py(const Hyperplane& h) {
    py::dict d;
    d["normal"] = to_py(h.normal);
    d["offset"] = to_fraction(h.offset);
    return d;
}

py::dict to_py(const Instance& inst) {
    py::dict d;
    d["dim"] = inst.dim;
    d["kind"] = inst.kind;
    d["points"] = to_py(inst.points);
    std::ostringstream os;
    write_instance(os, inst);
    d["text"] = os.str();
    return d;
}

Instance to_instance(const py::iterable& rows) {
    Instance inst;
    inst.points = to_points(rows);
    if (inst.points.empty()) throw PreconditionError("empty point set");
    inst.dim = inst.points.front().dim();
    return inst;
}

std::vector<Line> rich_line_list(const PointSet& pts, int r) { return enumerate_rich_lines(pts, r).lines; }

}  // namespace

PYBIND11_MODULE(_richlines, m) {
    m.doc() = "Exact rich-line enumeration, polynomial partitioning and hyperplane extraction.";

    static py::exception<Error> base(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
    py::register_exception<InvariantBreach>(m, "InvariantBreach", base.ptr());
    py::register_exception<OracleTooLarge>(m, "OracleTooLarge", base.ptr());
    py::register_exception<CutNotFound>(m, "CutNotFound", base.ptr());

    m.def(
        "rich_lines",
        [](const py::iterable& points, int r) {
            auto pts = to_points(points);
            auto set = enumerate_rich_lines(pts, r);
            py::list out;
            for (std::size_t i = 0; i < set.size(); ++i) {
                py::dict d = to_py(set.lines[i]);
                d["count"] = set.counts[i];
                out.append(d);
            }
            return out;
        },
        py::arg("points"), py::arg("r"), "Lines holding at least r of the points.");

    m.def(
        "oracle_rich_lines",
        [](const py::iterable& points, int r, std::size_t cap) {
            auto found = oracle_rich_lines(to_points(points), r, cap);
            return std::vector<std::vector<std::size_t>>(found.begin(), found.end());
        },
        py::arg("points"), py::arg("r"), py::arg("cap") = kDefaultOracleCap,
        "Brute-force rich lines as sorted index lists.");

    m.def(
        "partition",
        [](const py::iterable& points, int m_) {
            auto pts = to_points(points);
            auto pp = build_partition(pts, m_);
            auto cells = assign_cells(pts, pp);
            py::dict d;
            py::list factors;
            for (const auto& f : pp.factors) factors.append(f.to_string());
            d["factors"] = factors;
            d["lift_degrees"] = pp.lift_degrees;
            d["product_degree"] = pp.product_degree;
            py::dict sizes;
            for (const auto& [sv, cell] : cells.cells) sizes[py::str(to_string(sv))] = cell.size();
            d["cells"] = sizes;
            d["boundary"] = cells.boundary.size();
            auto halving = check_halving(pts, pp);
            d["halving_ok"] = !halving.has_value();
            return d;
        },
        py::arg("points"), py::arg("m"), "Sign-class partition polynomial of degree at most m.");

    m.def(
        "hypersurface",
        [](const py::iterable& points, int r) {
            auto pts = to_points(points);
            auto rep = find_rich_hypersurface(pts, rich_line_list(pts, r), r);
            py::dict d;
            d["status"] = to_string(rep.status);
            if (rep.status == HypersurfaceStatus::Ok) {
                d["m"] = rep.m;
                d["source"] = rep.source;
                d["polynomial"] = rep.result.poly.to_string();
                d["degree"] = rep.result.degree;
                d["lines_contained"] = rep.result.lines_contained.size();
                d["l_cell"] = rep.split.l_cell.size();
                d["l_rest"] = rep.split.l_rest.size();
            }
            return d;
        },
        py::arg("points"), py::arg("r"), "Low-degree surface through the r-rich lines.");

    m.def(
        "hyperplane",
        [](const py::iterable& points, int r) {
            auto pts = to_points(points);
            auto res = extract_hyperplane(pts, rich_line_list(pts, r), r);
            py::dict d;
            d["route"] = to_string(res.route);
            d["plane"] = res.plane ? py::object(to_py(*res.plane)) : py::object(py::none());
            d["count"] = res.contained.size();
            return d;
        },
        py::arg("points"), py::arg("r"), "A hyperplane holding many of the points.");

    m.def(
        "verify_json",
        [](const py::iterable& points, int r, bool oracle) {
            VerifyOptions opts;
            opts.oracle = oracle;
            return verify(to_instance(points), r, opts).doc.dump();
        },
        py::arg("points"), py::arg("r"), py::arg("oracle") = false, "Verification report as a JSON string.");

    m.def("gen_grid", [](std::size_t d, std::size_t k) { return to_py(gen_grid(d, k)); }, py::arg("d"), py::arg("k"));
    m.def(
        "gen_random",
        [](std::size_t d, std::size_t n, std::int64_t range, std::uint64_t seed) {
            return to_py(gen_random(d, n, range, seed));
        },
        py::arg("d"), py::arg("n"), py::arg("range"), py::arg("seed"));
    m.def(
        "gen_planted_hyperplane",
        [](std::size_t d, std::size_t n, py::handle fraction, int r, std::uint64_t seed) {
            return to_py(gen_planted_hyperplane(d, n, to_rational(fraction), r, seed));
        },
        py::arg("d"), py::arg("n"), py::arg("fraction"), py::arg("r"), py::arg("seed"));
    m.def(
        "gen_planted_hypersurface",
        [](std::size_t d, int degree, std::size_t lines, int r, std::uint64_t seed) {
            return to_py(gen_planted_hypersurface(d, degree, lines, r, seed));
        },
        py::arg("d"), py::arg("degree"), py::arg("lines"), py::arg("r"), py::arg("seed"));
    m.def(
        "read_instance",
        [](const std::string& text) {
            std::istringstream is(text);
            return to_py(read_instance(is));
        },
        py::arg("text"), "Parses the instance text format.");
}
