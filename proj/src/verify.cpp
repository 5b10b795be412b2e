#include "richlines/verify.hpp"

#include "richlines/containment.hpp"
#include "richlines/errors.hpp"
#include "richlines/incidence.hpp"
#include "richlines/partition.hpp"
#include "richlines/structure.hpp"

#include <algorithm>
#include <sstream>

namespace richlines {

namespace {

constexpr std::size_t kMaxListed = 500;

struct Checks {
    Json list = Json::array();
    bool failed = false;

    void add(const std::string& name, bool pass, const std::string& witness = {}) {
        Json c;
        c["name"] = name;
        c["pass"] = pass;
        if (!pass && !witness.empty()) c["witness"] = witness;
        list.push_back(std::move(c));
        if (!pass) failed = true;
    }
};

Integer power(long base, std::size_t e) {
    Integer out = 1;
    for (std::size_t i = 0; i < e; ++i) out *= base;
    return out;
}

std::vector<std::size_t> indices_on(const Line& l, const PointSet& points) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (incident(points[i], l)) out.push_back(i);
    return out;
}

Json poly_json(const VanishingResult& v) {
    Json j;
    j["degree"] = v.degree;
    j["polynomial"] = v.poly.to_string();
    j["lines_contained"] = v.lines_contained.size();
    return j;
}

}  // namespace

Json to_json(const Point& p) {
    Json j = Json::array();
    for (const auto& x : p.coords) j.push_back(to_string(x));
    return j;
}

Json to_json(const Line& l) {
    Json j;
    j["base"] = to_json(l.base);
    Json dir = Json::array();
    for (const auto& x : l.direction) dir.push_back(x.get_str());
    j["direction"] = dir;
    return j;
}

Json to_json(const Hyperplane& h) {
    Json j;
    Json n = Json::array();
    for (const auto& x : h.normal) n.push_back(to_string(x));
    j["normal"] = n;
    j["offset"] = to_string(h.offset);
    return j;
}

Json instance_summary(const Instance& inst) {
    Json j;
    j["kind"] = inst.kind;
    j["dim"] = inst.dim;
    j["n"] = inst.points.size();
    if (inst.planted_plane) {
        j["planted_hyperplane"] = to_json(*inst.planted_plane);
        j["planted_points"] = inst.planted_points;
    }
    if (!inst.planted_surface.empty()) j["planted_surface"] = inst.planted_surface;
    if (!inst.planted_lines.empty()) j["planted_lines"] = inst.planted_lines.size();
    return j;
}

VerificationReport verify(const Instance& inst, int r, const VerifyOptions& opts) {
    if (r < 2) throw PreconditionError("verify: r must be >= 2");
    const PointSet& points = inst.points;
    VerificationReport rep;
    Json& doc = rep.doc;
    Checks checks;
    doc["instance"] = instance_summary(inst);
    doc["r"] = r;

    const std::size_t n = points.size();
    const std::size_t d = inst.dim;
    RichLineSet rl = enumerate_rich_lines(points, r);
    {
        Json j;
        j["count"] = rl.size();
        j["incidences"] = incidence_count(points, rl.lines);
        Json lines = Json::array();
        for (std::size_t i = 0; i < rl.size() && i < kMaxListed; ++i) {
            Json lj = to_json(rl.lines[i]);
            lj["points"] = rl.counts[i];
            lines.push_back(std::move(lj));
        }
        j["lines"] = lines;
        j["truncated"] = rl.size() > kMaxListed;
        doc["rich_lines"] = j;
    }

    const bool oracle_ok = opts.oracle && n <= opts.oracle_cap;
    if (opts.oracle) {
        Json j;
        j["cap"] = opts.oracle_cap;
        j["ran"] = oracle_ok;
        if (oracle_ok) {
            auto expected = oracle_rich_lines(points, r, opts.oracle_cap);
            std::set<std::vector<std::size_t>> got;
            for (const auto& l : rl.lines) got.insert(indices_on(l, points));
            j["oracle_lines"] = expected.size();
            std::string witness;
            if (got != expected) {
                for (const auto& s : expected)
                    if (!got.count(s)) {
                        witness = "missed line through points " + to_string(points[s[0]]) + ", " +
                                  to_string(points[s[1]]);
                        break;
                    }
                if (witness.empty())
                    for (std::size_t i = 0; i < rl.size(); ++i)
                        if (!expected.count(indices_on(rl.lines[i], points))) {
                            witness = "spurious line " + to_string(rl.lines[i]);
                            break;
                        }
            }
            checks.add("rich_lines_match_oracle", got == expected, witness);
        }
        doc["oracle"] = j;
    }

    if (rl.size() == 0) {
        rep.vacuous = true;
        doc["status"] = "vacuous";
        doc["checks"] = checks.list;
        rep.breach = checks.failed;
        if (rep.breach) doc["status"] = "breach";
        return rep;
    }

    // Hypersurface pipeline.
    std::optional<HypersurfaceReport> hs;
    try {
        hs = find_rich_hypersurface(points, rl.lines, r);
    } catch (const InvariantBreach& e) {
        checks.add("hypersurface_invariants", false, e.what());
    } catch (const CutNotFound& e) {
        checks.add("hypersurface_invariants", false, e.what());
    }
    if (hs) {
        Json j;
        j["status"] = to_string(hs->status);
        if (hs->status == HypersurfaceStatus::Ok) {
            const auto& pp = hs->partition;
            j["m"] = hs->m;
            j["factors"] = pp.size();
            j["lift_degrees"] = pp.lift_degrees;
            j["product_degree"] = pp.product_degree;
            j["cells"] = hs->cells.cells.size();
            j["max_cell_size"] = hs->cells.max_cell_size();
            j["boundary_points"] = hs->cells.boundary.size();
            j["l_cell"] = hs->split.l_cell.size();
            j["l_rest"] = hs->split.l_rest.size();
            j["pair_count"] = hs->pair_count;
            j["multiplicity_sum"] = hs->multiplicity_sum;
            j["l_cell_constant"] = to_string(hs->l_cell_constant);
            j["partition_surface"] = poly_json(hs->partition_surface);
            if (hs->minimal_surface) j["minimal_surface"] = poly_json(*hs->minimal_surface);
            j["source"] = hs->source;
            j["result"] = poly_json(hs->result);

            auto halving = check_halving(points, pp);
            checks.add("partition_halving", !halving, halving.value_or(""));

            // Every open cell holds at most ceil(n / 2^s) points.
            Integer cap = (Integer(static_cast<unsigned long>(n)) + power(2, pp.size()) - 1) / power(2, pp.size());
            std::string cell_witness;
            for (const auto& [sv, cell] : hs->cells.cells)
                if (Integer(static_cast<unsigned long>(cell.size())) > cap) {
                    cell_witness = "cell " + to_string(sv) + " holds " + std::to_string(cell.size());
                    break;
                }
            checks.add("cell_size_bound", cell_witness.empty(), cell_witness);

            std::string cross_witness;
            int max_touched = 0;
            for (const auto& l : rl.lines) {
                CrossingProfile cp = crossing_profile(l, pp, points);
                max_touched = std::max(max_touched, cp.cells_touched);
                if (!cp.contained && cp.cells_touched > pp.product_degree + 1 && cross_witness.empty())
                    cross_witness = to_string(l) + " touches " + std::to_string(cp.cells_touched) + " cells";
            }
            j["max_cells_touched"] = max_touched;
            checks.add("crossing_bound", cross_witness.empty(), cross_witness);

            checks.add("pair_count_bound", hs->pair_count >= hs->multiplicity_sum);
            checks.add("cauchy_schwarz_floor", true);
            std::string rest_witness;
            for (const auto& l : hs->split.l_rest)
                if (!line_in_zero_set(l, pp.product())) {
                    rest_witness = to_string(l);
                    break;
                }
            checks.add("l_rest_in_zero_set", rest_witness.empty(), rest_witness);
            checks.add("degree_below_r_over_4", 4 * hs->result.degree < r, std::to_string(hs->result.degree));
        }
        doc["hypersurface"] = j;
    }

    // Hyperplane pipeline.
    std::optional<HyperplaneResult> hp;
    try {
        hp = extract_hyperplane(points, rl.lines, r);
    } catch (const InvariantBreach& e) {
        checks.add("hyperplane_invariants", false, e.what());
    } catch (const AllJoints& e) {
        checks.add("hyperplane_non_joint", false, e.what());
    } catch (const CutNotFound& e) {
        checks.add("hyperplane_invariants", false, e.what());
    }
    std::size_t plane_count = 0;
    if (hp) {
        Json j;
        j["route"] = to_string(hp->route);
        if (hp->plane) {
            j["plane"] = to_json(*hp->plane);
            plane_count = hp->contained.size();
        }
        j["count"] = plane_count;
        j["lz_lines"] = hp->lz_lines;
        j["pz_points"] = hp->pz_points;
        j["recomputed_minimal"] = hp->recomputed_minimal;
        if (hp->pivot) {
            j["pivot"] = to_json(*hp->pivot);
            j["pivot_degree"] = hp->pivot_degree;
            j["count_bound"] = hp->count_bound;
            checks.add("hyperplane_count_bound", plane_count >= hp->count_bound,
                       std::to_string(plane_count) + " < " + std::to_string(hp->count_bound));
        }
        if (hp->pruned) {
            Json g;
            g["a_side"] = hp->pruned->a_side.size();
            g["b_side"] = hp->pruned->b_side.size();
            g["edges"] = hp->pruned->edges.size();
            g["input_edges"] = hp->pruned->input_edges;
            g["min_deg_a"] = hp->pruned->min_deg_a;
            g["min_deg_b"] = hp->pruned->min_deg_b;
            g["threshold_a"] = to_string(hp->pruned->threshold_a);
            g["threshold_b"] = to_string(hp->pruned->threshold_b);
            j["pruned"] = g;
            checks.add("pruning_bounds", hp->pruned->satisfies_bounds());
        }
        if (inst.planted_plane && hp->plane) {
            std::size_t planted_in = 0;
            for (const auto& p : points)
                if (inst.planted_plane->contains(p)) ++planted_in;
            checks.add("hyperplane_covers_planted", plane_count >= inst.planted_points,
                       std::to_string(plane_count) + " < " + std::to_string(inst.planted_points));
            j["planted_points_on_plane"] = planted_in;
        }
        if (oracle_ok && hp->plane) {
            auto [oh, oc] = oracle_best_hyperplane(points, opts.oracle_cap);
            j["oracle_count"] = oc;
            j["matches_oracle"] = oc == plane_count;
            checks.add("hyperplane_within_oracle", plane_count <= oc,
                       std::to_string(plane_count) + " > " + std::to_string(oc));
        }
        doc["hyperplane"] = j;
    }

    // Gradient audit on the points of the certified surface.
    if (hs && hs->status == HypersurfaceStatus::Ok && !hs->result.lines_contained.empty()) {
        const auto& lz = hs->result.lines_contained;
        PointSet pz;
        std::vector<bool> flags;
        for (const auto& p : points) {
            std::vector<Line> through;
            for (const auto& l : lz)
                if (incident(p, l)) through.push_back(l);
            if (through.empty()) continue;
            pz.push_back(p);
            flags.push_back(is_joint(p, through).is_joint);
        }
        GradientAudit audit = gradient_audit(hs->result.poly, pz, flags, lz);
        Json j;
        j["points"] = pz.size();
        j["joints"] = std::count(flags.begin(), flags.end(), true);
        j["gradient_nonzero_points"] = audit.gradient_nonzero.size();
        if (audit.contradiction_component) j["contradiction_component"] = *audit.contradiction_component;
        doc["gradient_audit"] = j;
        checks.add("joints_have_zero_gradient", audit.joints_consistent,
                   audit.joint_failures.empty() ? "" : to_string(audit.joint_failures.front()));
    }

    Json k;
    Rational n_r(static_cast<unsigned long>(n));
    k["K"] = to_string(Rational(Integer(static_cast<unsigned long>(rl.size())) * power(r, d + 1)) / (n_r * n_r));
    if (hp && hp->plane)
        k["N"] = to_string(Rational(Integer(static_cast<unsigned long>(plane_count)) * power(r, d - 1)) / n_r);
    doc["constants"] = k;

    doc["checks"] = checks.list;
    rep.breach = checks.failed;
    doc["status"] = rep.breach ? "breach" : "pass";
    return rep;
}

std::string render_text(const Json& doc) {
    std::ostringstream os;
    const auto& inst = doc.at("instance");
    os << "instance: " << inst.at("kind").get<std::string>() << ", d=" << inst.at("dim") << ", n=" << inst.at("n")
       << '\n';
    if (doc.contains("r")) os << "r: " << doc.at("r") << '\n';
    if (doc.contains("rich_lines")) os << "rich lines: " << doc["rich_lines"].at("count") << '\n';
    if (doc.contains("hypersurface")) {
        const auto& h = doc["hypersurface"];
        os << "hypersurface: " << h.at("status").get<std::string>();
        if (h.contains("result"))
            os << ", degree " << h["result"].at("degree") << " (" << h.at("source").get<std::string>() << "), "
               << h["result"].at("lines_contained") << " lines contained";
        os << '\n';
    }
    if (doc.contains("hyperplane")) {
        const auto& h = doc["hyperplane"];
        os << "hyperplane: " << h.at("route").get<std::string>() << ", " << h.at("count") << " points";
        if (h.contains("oracle_count")) os << " (oracle " << h["oracle_count"] << ")";
        os << '\n';
    }
    if (doc.contains("constants"))
        for (const auto& [key, v] : doc["constants"].items()) os << "empirical " << key << ": " << v.get<std::string>() << '\n';
    if (doc.contains("checks"))
        for (const auto& c : doc["checks"]) {
            os << (c.at("pass").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>();
            if (c.contains("witness")) os << "  [" << c["witness"].get<std::string>() << "]";
            os << '\n';
        }
    if (doc.contains("timing")) os << "verify time: " << doc["timing"]["verify_ms"].dump() << " ms\n";
    if (doc.contains("status")) os << "status: " << doc["status"].get<std::string>() << '\n';
    return os.str();
}

}  // namespace richlines
