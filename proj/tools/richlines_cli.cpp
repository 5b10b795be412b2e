#include "richlines/containment.hpp"
#include "richlines/errors.hpp"
#include "richlines/incidence.hpp"
#include "richlines/instance.hpp"
#include "richlines/partition.hpp"
#include "richlines/structure.hpp"
#include "richlines/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace richlines;

namespace {

constexpr int kBreach = 1;
constexpr int kUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw PreconditionError("cannot write " + out_path);
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Instance load(const std::string& path) {
    if (path == "-") return read_instance(std::cin);
    return read_instance_file(path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rich lines, polynomial partitioning and hyperplane extraction over Q"};
    app.require_subcommand(1);

    std::string input = "-", output = "-", format = "json";
    int r = 3, m = 2;

    // gen
    auto* gen = app.add_subcommand("gen", "Write a generated instance file");
    std::string kind = "grid";
    std::size_t d = 2, k = 4, n = 100, lines = 20;
    std::int64_t range = 20;
    std::string fraction = "1/2";
    int degree = 2;
    std::uint64_t seed = 1;
    gen->add_option("--kind", kind, "grid | random | planted_hyperplane | planted_hypersurface")
        ->check(CLI::IsMember({"grid", "random", "planted_hyperplane", "planted_hypersurface"}));
    gen->add_option("--d", d, "dimension")->capture_default_str();
    gen->add_option("--k", k, "grid side")->capture_default_str();
    gen->add_option("--n", n, "number of points")->capture_default_str();
    gen->add_option("--range", range, "coordinate range for random points")->capture_default_str();
    gen->add_option("--fraction", fraction, "planted fraction p/q")->capture_default_str();
    gen->add_option("--r", r, "richness of planted lines")->capture_default_str();
    gen->add_option("--degree", degree, "planted surface degree")->capture_default_str();
    gen->add_option("--lines", lines, "number of planted lines")->capture_default_str();
    gen->add_option("--seed", seed, "64-bit seed")->capture_default_str();
    gen->add_option("-o,--output", output, "output file");

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("input", input, "instance file, - for stdin")->capture_default_str();
        sub->add_option("-o,--output", output, "output file");
    };

    auto* rich = app.add_subcommand("rich-lines", "List the r-rich lines");
    rich->add_option("--r", r, "richness")->required();
    add_io(rich);

    auto* part = app.add_subcommand("partition", "Build a degree-m partitioning polynomial");
    part->add_option("--m", m, "degree budget")->required();
    add_io(part);

    auto* hyps = app.add_subcommand("hypersurface", "Find a low-degree surface through the r-rich lines");
    hyps->add_option("--r", r, "richness")->required();
    add_io(hyps);

    auto* hypl = app.add_subcommand("hyperplane", "Find a hyperplane holding many points");
    hypl->add_option("--r", r, "richness")->required();
    add_io(hypl);

    auto* ver = app.add_subcommand("verify", "Run every pipeline and invariant check");
    bool use_oracle = false;
    ver->add_option("--r", r, "richness")->required();
    ver->add_flag("--oracle", use_oracle, "cross-check against brute force oracles");
    bool with_timing = false;
    ver->add_flag("--timing", with_timing, "record wall time in the report (breaks byte-identical reruns)");
    ver->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
    add_io(ver);

    auto* rpt = app.add_subcommand("report", "Render a verify report");
    rpt->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
    rpt->add_option("report", input, "report JSON, - for stdin")->capture_default_str();
    rpt->add_option("-o,--output", output, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (gen->parsed()) {
            Instance inst;
            if (kind == "grid") inst = gen_grid(d, k);
            else if (kind == "random") inst = gen_random(d, n, range, seed);
            else if (kind == "planted_hyperplane")
                inst = gen_planted_hyperplane(d, n, parse_rational(fraction), r, seed);
            else inst = gen_planted_hypersurface(d, degree, lines, r, seed);
            std::ostringstream os;
            write_instance(os, inst);
            emit(os.str(), output);
            return 0;
        }
        if (rpt->parsed()) {
            Json doc;
            if (input == "-") doc = Json::parse(std::cin);
            else {
                std::ifstream in(input);
                if (!in) throw ParseError("cannot open " + input);
                doc = Json::parse(in);
            }
            emit(format == "json" ? dump(doc) : render_text(doc), output);
            return doc.value("status", "pass") == "breach" ? kBreach : 0;
        }

        Instance inst = load(input);
        if (inst.points.empty()) throw PreconditionError("instance has no points");

        if (rich->parsed()) {
            RichLineSet rl = enumerate_rich_lines(inst.points, r);
            Json j;
            j["r"] = r;
            j["count"] = rl.size();
            Json arr = Json::array();
            for (std::size_t i = 0; i < rl.size(); ++i) {
                Json lj = to_json(rl.lines[i]);
                lj["points"] = rl.counts[i];
                arr.push_back(lj);
            }
            j["lines"] = arr;
            emit(dump(j), output);
            return 0;
        }
        if (part->parsed()) {
            PartitionPoly pp = build_partition(inst.points, m);
            CellMap cm = assign_cells(inst.points, pp);
            Json j;
            j["m"] = m;
            j["product_degree"] = pp.product_degree;
            j["lift_degrees"] = pp.lift_degrees;
            Json fs = Json::array();
            for (const auto& f : pp.factors) fs.push_back(f.to_string());
            j["factors"] = fs;
            Json cells = Json::object();
            for (const auto& [sv, pts] : cm.cells) cells[to_string(sv)] = pts.size();
            j["cells"] = cells;
            j["boundary_points"] = cm.boundary.size();
            auto halving = check_halving(inst.points, pp);
            j["halving_ok"] = !halving;
            if (halving) j["witness"] = *halving;
            emit(dump(j), output);
            return halving ? kBreach : 0;
        }
        if (hyps->parsed()) {
            RichLineSet rl = enumerate_rich_lines(inst.points, r);
            HypersurfaceReport hs = find_rich_hypersurface(inst.points, rl.lines, r);
            Json j;
            j["r"] = r;
            j["status"] = to_string(hs.status);
            j["rich_lines"] = rl.size();
            if (hs.status == HypersurfaceStatus::Ok) {
                j["m"] = hs.m;
                j["l_cell"] = hs.split.l_cell.size();
                j["l_rest"] = hs.split.l_rest.size();
                j["source"] = hs.source;
                j["degree"] = hs.result.degree;
                j["polynomial"] = hs.result.poly.to_string();
                j["lines_contained"] = hs.result.lines_contained.size();
            }
            emit(dump(j), output);
            return 0;
        }
        if (hypl->parsed()) {
            RichLineSet rl = enumerate_rich_lines(inst.points, r);
            HyperplaneResult hp = extract_hyperplane(inst.points, rl.lines, r);
            Json j;
            j["r"] = r;
            j["route"] = to_string(hp.route);
            if (hp.plane) j["plane"] = to_json(*hp.plane);
            j["count"] = hp.contained.size();
            if (hp.pivot) {
                j["pivot"] = to_json(*hp.pivot);
                j["count_bound"] = hp.count_bound;
            }
            emit(dump(j), output);
            return 0;
        }
        if (ver->parsed()) {
            VerifyOptions opts;
            opts.oracle = use_oracle;
            opts.oracle_cap = oracle_cap();
            auto t0 = std::chrono::steady_clock::now();
            VerificationReport rep = verify(inst, r, opts);
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
            std::cerr << "verify took " << ms.count() << " ms\n";
            if (with_timing) rep.doc["timing"] = {{"verify_ms", ms.count()}};
            emit(format == "json" ? dump(rep.doc) : render_text(rep.doc), output);
            return rep.exit_code();
        }
    } catch (const InvariantBreach& e) {
        std::cerr << "invariant breach: " << e.what() << '\n';
        return kBreach;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "bad report: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return kBreach;
    }
    return kUsage;
}
