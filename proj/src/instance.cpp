#include "richlines/instance.hpp"

#include "richlines/errors.hpp"
#include "richlines/linalg.hpp"
#include "richlines/rng.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace richlines {

namespace {

Point int_point(const std::vector<std::int64_t>& c) {
    Vector v;
    v.reserve(c.size());
    for (auto x : c) v.emplace_back(static_cast<long>(x));
    return Point(std::move(v));
}

// d - 1 independent integer vectors spanning a random hyperplane direction space.
std::vector<Vector> random_plane_basis(std::size_t d, Rng& rng) {
    for (;;) {
        std::vector<Vector> basis(d - 1, Vector(d));
        for (auto& v : basis)
            for (auto& x : v) x = rng.uniform(-3, 3);
        if (rank(Matrix::from_rows(basis, d)) == d - 1) return basis;
    }
}

Point random_int_point(std::size_t d, Rng& rng, std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> c(d);
    for (auto& x : c) x = rng.uniform(lo, hi);
    return int_point(c);
}

Point combine(const Point& origin, const std::vector<Vector>& basis, const std::vector<std::int64_t>& coef) {
    Vector v(origin.coords);
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t c = 0; c < v.size(); ++c) v[c] += basis[j][c] * static_cast<long>(coef[j]);
    return Point(std::move(v));
}

Hyperplane plane_of(const Point& origin, const std::vector<Vector>& basis) {
    auto null = nullspace(Matrix::from_rows(basis, origin.dim()));
    return hyperplane_with_normal(null.front(), origin);
}

// Distinct integers drawn from [lo, hi], widening the range when it is too small.
std::vector<std::int64_t> distinct_ints(std::size_t count, std::int64_t lo, std::int64_t hi, Rng& rng) {
    while (hi - lo + 1 < static_cast<std::int64_t>(2 * count)) {
        lo -= static_cast<std::int64_t>(count);
        hi += static_cast<std::int64_t>(count);
    }
    std::vector<std::int64_t> out;
    std::set<std::int64_t> seen;
    while (out.size() < count) {
        auto x = rng.uniform(lo, hi);
        if (seen.insert(x).second) out.push_back(x);
    }
    return out;
}

class PointCollector {
public:
    bool add(const Point& p) {
        if (!seen_.insert(p).second) return false;
        points_.push_back(p);
        return true;
    }
    bool has(const Point& p) const { return seen_.count(p) > 0; }
    std::size_t size() const { return points_.size(); }
    PointSet take() { return std::move(points_); }

private:
    std::set<Point> seen_;
    PointSet points_;
};

// r points on a random line inside the plane (origin, basis).
Line planted_line_in_plane(const Point& origin, const std::vector<Vector>& basis, int r, Rng& rng,
                           PointCollector& pts) {
    const std::size_t d = origin.dim();
    Vector dir(d);
    std::vector<std::int64_t> coef(basis.size());
    do {
        for (auto& c : coef) c = rng.uniform(-2, 2);
        dir.assign(d, Rational(0));
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t c = 0; c < d; ++c) dir[c] += basis[j][c] * static_cast<long>(coef[j]);
    } while (std::all_of(dir.begin(), dir.end(), [](const Rational& x) { return x == 0; }));
    std::vector<std::int64_t> off(basis.size());
    for (auto& c : off) c = rng.uniform(-6, 6);
    Point base = combine(origin, basis, off);
    for (auto t : distinct_ints(static_cast<std::size_t>(r), -20, 20, rng)) {
        Vector v(base.coords);
        for (std::size_t c = 0; c < d; ++c) v[c] += dir[c] * static_cast<long>(t);
        pts.add(Point(std::move(v)));
    }
    return make_line(base, dir);
}

}  // namespace

Instance gen_grid(std::size_t d, std::size_t k) {
    if (d < 2 || k < 2) throw PreconditionError("gen_grid: need d >= 2 and k >= 2");
    Instance inst;
    inst.dim = d;
    inst.kind = "grid";
    std::vector<std::int64_t> c(d, 0);
    for (;;) {
        inst.points.push_back(int_point(c));
        std::size_t i = d;
        while (i > 0 && ++c[i - 1] == static_cast<std::int64_t>(k)) c[--i] = 0;
        if (i == 0) break;
    }
    return inst;
}

Instance gen_random(std::size_t d, std::size_t n, std::int64_t range, std::uint64_t seed) {
    if (d < 2) throw PreconditionError("gen_random: need d >= 2");
    long double cap = 1;
    for (std::size_t i = 0; i < d; ++i) cap *= static_cast<long double>(range + 1);
    if (static_cast<long double>(n) > cap) throw PreconditionError("gen_random: more points than lattice sites");
    Rng rng(seed);
    PointCollector pts;
    while (pts.size() < n) pts.add(random_int_point(d, rng, 0, range));
    Instance inst;
    inst.dim = d;
    inst.kind = "random";
    inst.points = pts.take();
    return inst;
}

Instance gen_planted_hyperplane(std::size_t d, std::size_t n, const Rational& fraction, int r, std::uint64_t seed) {
    if (d < 2) throw PreconditionError("gen_planted_hyperplane: need d >= 2");
    if (fraction <= 0 || fraction > 1) throw PreconditionError("gen_planted_hyperplane: fraction must be in (0, 1]");
    Rng rng(seed);
    const std::size_t target = static_cast<std::size_t>(mpz_class(fraction * static_cast<unsigned long>(n)).get_ui());
    const std::size_t k = d - 1;

    std::vector<std::int64_t> sides(k, 1);
    if (target > 0) {
        auto product = [&] {
            std::size_t p = 1;
            for (auto s : sides) p *= static_cast<std::size_t>(s);
            return p;
        };
        while (true) {
            std::vector<std::int64_t> bigger(k, sides[0] + 1);
            std::size_t p = 1;
            for (auto s : bigger) p *= static_cast<std::size_t>(s);
            if (p > target) break;
            sides = bigger;
        }
        if (sides[0] < r && k > 1 && target >= static_cast<std::size_t>(2 * r)) {
            sides.assign(k, 1);
            sides[0] = r;
            std::size_t rest = target / static_cast<std::size_t>(r);
            sides[1] = static_cast<std::int64_t>(rest);
        }
        for (std::size_t i = 0; i < k; ++i) {
            auto save = sides[i];
            ++sides[i];
            if (product() > target) sides[i] = save;
        }
    } else {
        sides.assign(k, 0);
    }

    Point origin = random_int_point(d, rng, -5, 5);
    auto basis = random_plane_basis(d, rng);
    Hyperplane plane = plane_of(origin, basis);

    PointCollector pts;
    if (target > 0) {
        std::vector<std::int64_t> c(k, 0);
        for (;;) {
            pts.add(combine(origin, basis, c));
            std::size_t i = k;
            while (i > 0 && ++c[i - 1] == sides[i - 1]) c[--i] = 0;
            if (i == 0) break;
        }
    }
    const std::int64_t far = *std::max_element(sides.begin(), sides.end()) + 1;
    std::vector<std::int64_t> coef(k);
    while (pts.size() < target) {
        for (auto& x : coef) x = rng.uniform(far, far + 60);
        pts.add(combine(origin, basis, coef));
    }
    while (pts.size() < n) {
        Point p = random_int_point(d, rng, -1000, 1000);
        if (plane.contains(p)) continue;
        pts.add(p);
    }
    Instance inst;
    inst.dim = d;
    inst.kind = "planted_hyperplane";
    inst.points = pts.take();
    inst.planted_plane = plane;
    inst.planted_points = target;
    inst.planted_surface = MultiPoly::affine(plane.normal, -plane.offset).primitive().to_string();
    return inst;
}

Instance gen_planted_hypersurface(std::size_t d, int degree, std::size_t line_count, int r, std::uint64_t seed) {
    if (d < 2) throw PreconditionError("gen_planted_hypersurface: need d >= 2");
    if (degree < 1) throw PreconditionError("gen_planted_hypersurface: degree must be >= 1");
    if (r < 2) throw PreconditionError("gen_planted_hypersurface: r must be >= 2");
    Rng rng(seed);
    Instance inst;
    inst.dim = d;
    inst.kind = "planted_hypersurface";
    PointCollector pts;

    if (degree == 2 && d == 3) {
        // Lines x = a, z = a y of the doubly ruled quadric z = xy.
        auto as = distinct_ints(line_count, -12, 12, rng);
        for (auto a : as) {
            for (auto y : distinct_ints(static_cast<std::size_t>(r), -15, 15, rng))
                pts.add(int_point({a, y, a * y}));
            inst.planted_lines.push_back(
                make_line(int_point({a, 0, 0}), Vector{Rational(0), Rational(1), Rational(static_cast<long>(a))}));
        }
        MultiPoly z = MultiPoly::variable(3, 2);
        inst.planted_surface = (z - MultiPoly::variable(3, 0) * MultiPoly::variable(3, 1)).to_string();
    } else {
        std::vector<std::pair<Point, std::vector<Vector>>> planes;
        MultiPoly surface = MultiPoly::constant(d, 1);
        for (int i = 0; i < degree; ++i) {
            Point origin = random_int_point(d, rng, -5, 5);
            auto basis = random_plane_basis(d, rng);
            Hyperplane h = plane_of(origin, basis);
            surface = surface * MultiPoly::affine(h.normal, -h.offset);
            planes.emplace_back(std::move(origin), std::move(basis));
        }
        // In the plane each factor is itself a line.
        if (d == 2 && line_count > static_cast<std::size_t>(degree))
            throw PreconditionError("gen_planted_hypersurface: a degree " + std::to_string(degree) +
                                    " curve of lines holds at most " + std::to_string(degree) + " lines");
        std::set<Line> used;
        for (std::size_t i = 0; used.size() < line_count; ++i) {
            if (i > 1000 * (line_count + 1)) throw PreconditionError("gen_planted_hypersurface: cannot place lines");
            const auto& [origin, basis] = planes[i % planes.size()];
            PointCollector trial;
            Line l = planted_line_in_plane(origin, basis, r, rng, trial);
            if (!used.insert(l).second) continue;
            for (const auto& p : trial.take()) pts.add(p);
            inst.planted_lines.push_back(l);
        }
        inst.planted_surface = surface.primitive().to_string();
    }
    inst.points = pts.take();
    return inst;
}

void write_instance(std::ostream& os, const Instance& inst) {
    os << "# richlines instance\n";
    os << "#! kind " << inst.kind << '\n';
    if (inst.planted_plane) {
        os << "#! planted_hyperplane";
        for (const auto& x : inst.planted_plane->normal) os << ' ' << to_string(x);
        os << ' ' << to_string(inst.planted_plane->offset) << '\n';
        os << "#! planted_points " << inst.planted_points << '\n';
    }
    if (!inst.planted_surface.empty()) os << "#! planted_surface " << inst.planted_surface << '\n';
    for (const auto& l : inst.planted_lines) {
        os << "#! planted_line";
        for (const auto& x : l.base.coords) os << ' ' << to_string(x);
        os << " |";
        for (const auto& x : l.direction) os << ' ' << x.get_str();
        os << '\n';
    }
    os << "dim " << inst.dim << '\n';
    for (const auto& p : inst.points) {
        for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? " " : "") << to_string(p[i]);
        os << '\n';
    }
}

Instance read_instance(std::istream& is) {
    Instance inst;
    std::string line;
    std::size_t lineno = 0;
    bool have_dim = false;
    std::set<Point> seen;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (line.rfind("#!", 0) == 0) {
            std::istringstream ss(line.substr(2));
            std::string key;
            ss >> key;
            if (key == "kind") {
                ss >> inst.kind;
            } else if (key == "planted_points") {
                ss >> inst.planted_points;
            } else if (key == "planted_surface") {
                std::getline(ss >> std::ws, inst.planted_surface);
            } else if (key == "planted_hyperplane") {
                std::vector<Rational> vals;
                std::string tok;
                while (ss >> tok) vals.push_back(parse_rational(tok));
                if (vals.size() < 2) fail("bad planted_hyperplane record");
                Rational off = vals.back();
                vals.pop_back();
                inst.planted_plane = Hyperplane{vals, off};
            } else if (key == "planted_line") {
                Vector base;
                IntVector dir;
                std::string tok;
                bool in_dir = false;
                while (ss >> tok) {
                    if (tok == "|") in_dir = true;
                    else if (in_dir) dir.emplace_back(tok);
                    else base.push_back(parse_rational(tok));
                }
                if (base.empty() || base.size() != dir.size()) fail("bad planted_line record");
                inst.planted_lines.push_back(make_line(Point(base), to_vector(dir)));
            }
            continue;
        }
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;
        if (!have_dim) {
            if (tok != "dim") fail("expected 'dim d' header");
            long d = 0;
            if (!(ss >> d) || d < 1) fail("bad dimension");
            inst.dim = static_cast<std::size_t>(d);
            have_dim = true;
            continue;
        }
        Vector coords{parse_rational(tok)};
        while (ss >> tok) coords.push_back(parse_rational(tok));
        if (coords.size() != inst.dim) fail("point has " + std::to_string(coords.size()) + " coordinates");
        Point p(std::move(coords));
        if (!seen.insert(p).second) fail("duplicate point " + to_string(p));
        inst.points.push_back(std::move(p));
    }
    if (!have_dim) throw ParseError("missing 'dim d' header");
    return inst;
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_instance(in);
}

}  // namespace richlines
