#include "gfan/json_io.hpp"
#include "gfan/orthant_search.hpp"
#include "gfan/polytope.hpp"
#include "gfan/reduction.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitCountMismatch = 3;
constexpr int kExitIo = 4;
constexpr int kExitParse = 5;

int default_jobs() {
    if (const char* env = std::getenv("GFAN_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

int cmd_enumerate(int rank, const std::string& out_dir, int jobs) {
    std::filesystem::create_directories(out_dir);
    if (rank == 2) {
        gfan::Rank2Report rep = gfan::enumerate_rank2();
        gfan::write_file(out_dir + "/rank2_report.json", gfan::rank2_report_to_json(rep));
        std::cout << "rank 2: " << rep.fans.size() << " convex fans, " << rep.class_forms.size()
                  << " isomorphism classes\n";
        if (rep.fans.size() != 16 || rep.class_forms.size() != 7) {
            std::cerr << "count mismatch: expected 16 fans / 7 classes\n";
            return kExitCountMismatch;
        }
        return kExitOk;
    }
    gfan::ClassificationReport rep = gfan::enumerate_rank3(jobs);
    gfan::write_file(out_dir + "/rank3_report.json", gfan::rank3_report_to_json(rep));
    gfan::write_file(out_dir + "/rank3_summary.csv", gfan::rank3_summary_csv(rep));
    std::cout << "rank 3: " << rep.candidate_orbits << " candidate orbits, " << rep.realizable
              << " realizable, " << rep.excluded << " excluded\n";
    if (rep.candidate_orbits != 66 || rep.realizable != 61 || rep.excluded != 5) {
        std::cerr << "count mismatch: expected 66 orbits = 61 + 5\n";
        gfan::write_file(out_dir + "/rank3_count_mismatch.txt",
                         "orbits=" + std::to_string(rep.candidate_orbits) +
                             " realizable=" + std::to_string(rep.realizable) +
                             " excluded=" + std::to_string(rep.excluded) + "\n");
        return kExitCountMismatch;
    }
    return kExitOk;
}

int cmd_check(const std::string& path, bool as_json) {
    gfan::Fan f;
    try {
        f = gfan::fan_from_json(gfan::read_file(path));
    } catch (const gfan::parse_error& e) {
        std::cerr << path << ':' << e.line << ':' << e.column << ": " << e.what() << "\n";
        return kExitParse;
    }
    gfan::ValidityReport rep = gfan::validate(f);
    bool convex = false, ordering = false, reflexive = false, unique_interior = false,
         hull = false;
    if (rep.all()) {
        gfan::ConvexityResult cv = gfan::is_convex(f);
        convex = cv.convex;
        ordering = cv.ordering_ok;
        hull = gfan::hull_inequalities_hold(f);
        if (convex) {
            gfan::GPolytope p = gfan::g_polytope(f);
            reflexive = gfan::is_reflexive(p);
            unique_interior = gfan::unique_interior_lattice_point(p);
        }
    }
    bool pass = rep.all() && convex && hull && reflexive && unique_interior;
    if (as_json) {
        std::cout << "{\"simplicial\":" << rep.simplicial << ",\"nonsingular\":" << rep.nonsingular
                  << ",\"sign_coherent\":" << rep.sign_coherent
                  << ",\"fan_property\":" << rep.fan_property << ",\"complete\":" << rep.complete
                  << ",\"convex\":" << convex << ",\"hull_ok\":" << hull
                  << ",\"ordering_ok\":" << ordering << ",\"reflexive\":" << reflexive
                  << ",\"unique_interior\":" << unique_interior << ",\"pass\":" << pass << "}\n";
    } else {
        auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
        std::cout << "simplicial:      " << flag(rep.simplicial) << "\n"
                  << "nonsingular:     " << flag(rep.nonsingular) << "\n"
                  << "sign-coherent:   " << flag(rep.sign_coherent) << "\n"
                  << "fan property:    " << flag(rep.fan_property) << "\n"
                  << "complete:        " << flag(rep.complete) << "\n"
                  << "convex:          " << flag(convex) << "\n"
                  << "hull test:       " << flag(hull) << "\n"
                  << "ordering:        " << flag(ordering) << "\n"
                  << "reflexive:       " << flag(reflexive) << "\n"
                  << "unique interior: " << flag(unique_interior) << "\n";
    }
    return pass ? kExitOk : kExitValidation;
}

int parse_triple(const std::string& text, gfan::MutationDatum& out) {
    if (text.size() != 3) return 1;
    out.l = text[0] - '0';
    out.r = text[1] - '0';
    out.h = text[2] - '0';
    return gfan::admissible_triple(out) ? 0 : 1;
}

int cmd_orthant(const std::string& d12s, const std::string& d32s, int h13,
                const std::string& out_json, const std::string& out_svg, double scale) {
    gfan::MutationDatum d12, d32;
    if (parse_triple(d12s, d12) || parse_triple(d32s, d32)) {
        std::cerr << "bad datum triple; expected one of 000,110,120,210,111,121,211\n";
        return kExitValidation;
    }
    gfan::OrthantFanId id;
    bool found = false;
    for (int m = 0; m <= 13 && !found; ++m) {
        auto [a, b] = gfan::dm_datum(m);
        if (a == d12 && b == d32) { id = {m, h13, false}; found = true; }
        else if (a == d32 && b == d12) { id = {m, h13, true}; found = true; }
    }
    if (!found) {
        std::cerr << "not a convex g-fan datum: (" << d12s << "," << d32s << ")\n";
        return kExitValidation;
    }
    gfan::OrthantFragment frag = gfan::orthant_fan(id);
    std::ostringstream os;
    os << "{\"m\":" << id.m << ",\"mirrored\":" << (id.mirrored ? "true" : "false") << ",\"rays\":[";
    for (std::size_t i = 0; i < frag.rays.size(); ++i) {
        if (i) os << ',';
        os << '[' << frag.rays[i][0] << ',' << frag.rays[i][1] << ',' << frag.rays[i][2] << ']';
    }
    os << "],\"cones\":[";
    for (std::size_t i = 0; i < frag.cones.size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t k = 0; k < frag.cones[i].size(); ++k) {
            if (k) os << ',';
            os << frag.cones[i][k];
        }
        os << ']';
    }
    os << "]}\n";
    if (out_json.empty()) std::cout << os.str();
    else gfan::write_file(out_json, os.str());
    if (!out_svg.empty()) gfan::write_file(out_svg, gfan::fragment_to_svg(frag, scale));
    return kExitOk;
}

int cmd_reduce(const std::string& path, const std::vector<gfan::Int>& ray) {
    gfan::Fan f;
    try {
        f = gfan::fan_from_json(gfan::read_file(path));
    } catch (const gfan::parse_error& e) {
        std::cerr << path << ':' << e.line << ':' << e.column << ": " << e.what() << "\n";
        return kExitParse;
    }
    if (ray.size() != 3) {
        std::cerr << "--ray needs three integers\n";
        return kExitValidation;
    }
    gfan::Vec w(ray[0], ray[1], ray[2]);
    try {
        gfan::Fan reduced = gfan::reduce_at_ray(f, w);
        auto [p, q] = gfan::maximal_paths_at_ray(f, w);
        auto [tp, tq] = gfan::match_template(p, q);
        std::cout << gfan::fan_to_json(reduced);
        auto show = [](const gfan::LabeledPath& lp) {
            std::ostringstream os;
            os << "start " << gfan::to_string(lp.first_exchanged) << ":";
            for (const auto& a : lp.arrows) os << " (" << a.over << "/" << a.under << ")";
            return os.str();
        };
        std::cout << "path p: " << show(p) << "  template " << gfan::to_string(tp) << "\n";
        std::cout << "path q: " << show(q) << "  template " << gfan::to_string(tq) << "'\n";
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "reduce failed: " << e.what() << "\n";
        return kExitValidation;
    }
}

int cmd_catalog_export(const std::string& out_path) {
    gfan::write_file(out_path, gfan::catalog_to_json());
    return kExitOk;
}

int cmd_render(int m, int h13, const std::string& out_svg, double scale) {
    if (m < 0 || m > 13) {
        std::cerr << "m must be in 0..13\n";
        return kExitValidation;
    }
    gfan::OrthantFragment frag = gfan::orthant_fan(gfan::OrthantFanId{m, h13, false});
    gfan::write_file(out_svg, gfan::fragment_to_svg(frag, scale));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sign-coherent fan classification tool"};
    app.require_subcommand(1);

    int rank = 3;
    std::string out_dir = ".";
    int jobs = default_jobs();
    auto* enumerate = app.add_subcommand("enumerate", "run the rank-2 or rank-3 enumeration");
    enumerate->add_option("--rank", rank, "2 or 3")->check(CLI::IsMember({2, 3}));
    enumerate->add_option("--out", out_dir, "output directory");
    enumerate->add_option("--jobs", jobs, "worker threads for the scan");

    std::string check_path;
    bool check_json = false;
    auto* check = app.add_subcommand("check", "validate a fan JSON file");
    check->add_option("fan", check_path, "fan JSON path")->required();
    check->add_flag("--json", check_json, "machine-readable output");

    std::string d12s, d32s, orthant_json, orthant_svg;
    int h13 = 0;
    double scale = 100.0;
    auto* orthant = app.add_subcommand("orthant", "emit a catalog orthant fragment");
    orthant->add_option("--d12", d12s, "triple lrh, e.g. 111")->required();
    orthant->add_option("--d32", d32s, "triple lrh, e.g. 120")->required();
    orthant->add_option("--h13", h13, "sub-case for d(10)");
    orthant->add_option("--out", orthant_json, "write JSON here instead of stdout");
    orthant->add_option("--svg", orthant_svg, "also write an SVG rendering");
    orthant->add_option("--scale", scale, "SVG scale");

    std::string reduce_path;
    std::vector<gfan::Int> ray;
    auto* reduce = app.add_subcommand("reduce", "reduce a fan at a ray");
    reduce->add_option("fan", reduce_path, "fan JSON path")->required();
    reduce->add_option("--ray", ray, "ray coordinates")->expected(3)->required();

    std::string export_path = "catalog.json";
    auto* catalog = app.add_subcommand("catalog-export", "write the fragment catalog");
    catalog->add_option("--out", export_path, "output path");

    int render_m = 0, render_h = 0;
    std::string render_out = "fragment.svg";
    auto* render = app.add_subcommand("render", "draw one orthant fragment as SVG");
    render->add_option("--m", render_m, "fragment index 0..13")->required();
    render->add_option("--h13", render_h, "sub-case for d(10)");
    render->add_option("--out", render_out, "output SVG path");
    render->add_option("--scale", scale, "SVG scale");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(rank, out_dir, jobs);
        if (check->parsed()) return cmd_check(check_path, check_json);
        if (orthant->parsed()) return cmd_orthant(d12s, d32s, h13, orthant_json, orthant_svg, scale);
        if (reduce->parsed()) return cmd_reduce(reduce_path, ray);
        if (catalog->parsed()) return cmd_catalog_export(export_path);
        if (render->parsed()) return cmd_render(render_m, render_h, render_out, scale);
    } catch (const gfan::io_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
