#include "gfan/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gfan {

using json = nlohmann::ordered_json;

namespace {

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (int i = 0; i < v.rank; ++i) a.push_back(v[i]);
    return a;
}

json triple_to_json(const MutationDatum& m) { return json::array({m.l, m.r, m.h}); }

json fan_to_json_obj(const Fan& f) {
    json j;
    j["rank"] = f.rank();
    json rays = json::array();
    for (const Vec& r : f.rays()) rays.push_back(vec_to_json(r));
    j["rays"] = std::move(rays);
    json cones = json::array();
    for (const Cone& c : f.max_cones()) {
        json ids = json::array();
        for (int id : c.ray_ids) ids.push_back(id);
        cones.push_back(std::move(ids));
    }
    j["max_cones"] = std::move(cones);
    return j;
}

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') { ++line; col = 1; }
        else ++col;
    }
    return {line, col};
}

}  // namespace

std::string fan_to_json(const Fan& f) { return fan_to_json_obj(f).dump(2) + "\n"; }

Fan fan_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [l, c] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw parse_error(std::string("JSON parse error: ") + e.what(), l, c);
    }
    if (!j.is_object() || !j.contains("rank") || !j.contains("rays") || !j.contains("max_cones"))
        throw parse_error("fan JSON must have rank, rays and max_cones", 1, 1);
    const int rank = j["rank"].get<int>();
    if (rank != 2 && rank != 3) throw parse_error("rank must be 2 or 3", 1, 1);
    std::vector<Vec> rays;
    for (const auto& r : j["rays"]) {
        if (!r.is_array() || static_cast<int>(r.size()) != rank)
            throw parse_error("ray with wrong number of coordinates", 1, 1);
        Vec v;
        v.rank = rank;
        for (int i = 0; i < rank; ++i) v[i] = r[static_cast<std::size_t>(i)].get<Int>();
        rays.push_back(v);
    }
    std::vector<std::vector<int>> cones;
    for (const auto& c : j["max_cones"]) {
        std::vector<int> ids;
        for (const auto& id : c) ids.push_back(id.get<int>());
        cones.push_back(std::move(ids));
    }
    return Fan(rank, std::move(rays), std::move(cones));
}

std::string polytope_to_json(const GPolytope& p) {
    json j;
    json verts = json::array();
    for (const Vec& v : p.vertex_candidates) verts.push_back(vec_to_json(v));
    j["vertices"] = std::move(verts);
    json normals = json::array();
    for (const HalfSpace& h : p.half_spaces) normals.push_back(vec_to_json(h.normal));
    j["normals"] = std::move(normals);
    return j.dump(2) + "\n";
}

std::string datum_to_json(const DatumD& d) {
    json j;
    for (std::size_t k = 0; k < d.e.size(); ++k) {
        std::string key = "d" + std::to_string(DatumD::pairs[k].first) +
                          std::to_string(DatumD::pairs[k].second);
        j[key] = triple_to_json(d.e[k]);
    }
    return j.dump();
}

std::string catalog_to_json() {
    json j;
    json table = json::array();
    for (int m = 0; m <= 13; ++m) {
        auto [a, b] = dm_datum(m);
        json row;
        row["m"] = m;
        row["d12"] = triple_to_json(a);
        row["d32"] = triple_to_json(b);
        table.push_back(std::move(row));
    }
    j["dm_table"] = std::move(table);
    json frags = json::array();
    auto add = [&](const OrthantFanId& id, const std::string& name) {
        OrthantFragment fr = orthant_fan(id);
        json e;
        e["name"] = name;
        json rays = json::array();
        for (const Vec& r : fr.rays) rays.push_back(vec_to_json(r));
        e["rays"] = std::move(rays);
        json cones = json::array();
        for (const auto& c : fr.cones) {
            json ids = json::array();
            for (int i : c) ids.push_back(i);
            cones.push_back(std::move(ids));
        }
        e["cones"] = std::move(cones);
        frags.push_back(std::move(e));
    };
    for (int m = 0; m <= 13; ++m) {
        if (m == 10) {
            add(OrthantFanId{10, 0, false}, "d10_0");
            add(OrthantFanId{10, 1, false}, "d10_1");
        } else {
            add(OrthantFanId{m, 0, false}, "d" + std::to_string(m));
        }
    }
    j["fragments"] = std::move(frags);
    return j.dump(2) + "\n";
}

std::string rank2_report_to_json(const Rank2Report& rep) {
    json j;
    json fans = json::array();
    for (const Rank2Fan& rf : rep.fans) {
        json e;
        e["quadrant_pm"] = json::array({rf.quadrant_pm.first, rf.quadrant_pm.second});
        e["quadrant_mp"] = json::array({rf.quadrant_mp.first, rf.quadrant_mp.second});
        e["fan"] = fan_to_json_obj(rf.fan);
        fans.push_back(std::move(e));
    }
    j["fans"] = std::move(fans);
    j["counts"]["fans"] = rep.fans.size();
    j["counts"]["classes"] = rep.class_forms.size();
    json classes = json::array();
    for (const std::string& s : rep.class_forms) classes.push_back(s);
    j["classes"] = std::move(classes);
    return j.dump(2) + "\n";
}

std::string rank3_report_to_json(const ClassificationReport& rep) {
    json j;
    j["counts"]["admissible_data"] = rep.admissible_data;
    j["counts"]["candidate_orbits"] = rep.candidate_orbits;
    j["counts"]["realizable"] = rep.realizable;
    j["counts"]["excluded"] = rep.excluded;
    j["orbit_fan_dedup_agrees"] = rep.orbit_fan_dedup_agrees;
    json orbits = json::array();
    for (const OrbitEntry& e : rep.orbits) {
        json o;
        o["datum"] = json::parse(datum_to_json(e.datum));
        o["realizable"] = e.realizable;
        o["ordering_ok"] = e.ordering_ok;
        o["templates_ok"] = e.templates_ok;
        o["ray_count"] = e.ray_count;
        o["cone_count"] = e.cone_count;
        o["fan"] = fan_to_json_obj(e.fan);
        orbits.push_back(std::move(o));
    }
    j["orbits"] = std::move(orbits);
    return j.dump(2) + "\n";
}

std::string rank3_summary_csv(const ClassificationReport& rep) {
    std::ostringstream os;
    os << "datum,ray_count,cone_count,realizable\n";
    for (const OrbitEntry& e : rep.orbits) {
        os << serialize_datum(e.datum) << ',' << e.ray_count << ',' << e.cone_count << ','
           << (e.realizable ? 1 : 0) << '\n';
    }
    return os.str();
}

std::string fragment_to_svg(const OrthantFragment& frag, double scale) {
    // Fixed axonometric map: e1 -> (-0.82, -0.57), e2 -> (1, 0), e3 -> (0, 1).
    const double ex[2] = {-0.82, -0.57};
    const double ey[2] = {1.0, 0.0};
    const double ez[2] = {0.0, 1.0};
    auto proj = [&](const Vec& v) {
        double x = static_cast<double>(v[0]) * ex[0] + static_cast<double>(v[1]) * ey[0] +
                   static_cast<double>(v[2]) * ez[0];
        double y = static_cast<double>(v[0]) * ex[1] + static_cast<double>(v[1]) * ey[1] +
                   static_cast<double>(v[2]) * ez[1];
        // SVG y axis points down.
        return std::pair<double, double>(x * scale, -y * scale);
    };
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    for (const Vec& r : frag.rays) {
        auto [x, y] = proj(r);
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    }
    const double pad = 0.25 * scale;
    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (minx - pad) << ' '
       << (miny - pad) << ' ' << (maxx - minx + 2 * pad) << ' ' << (maxy - miny + 2 * pad)
       << "\">\n";
    std::set<std::pair<int, int>> edges;
    for (const auto& c : frag.cones)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t k = i + 1; k < c.size(); ++k)
                edges.insert({std::min(c[i], c[k]), std::max(c[i], c[k])});
    for (const auto& [i, k] : edges) {
        auto [x1, y1] = proj(frag.rays[static_cast<std::size_t>(i)]);
        auto [x2, y2] = proj(frag.rays[static_cast<std::size_t>(k)]);
        os << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
           << "\" stroke=\"#3366aa\" stroke-width=\"" << 0.03 * scale << "\"/>\n";
    }
    for (const Vec& r : frag.rays) {
        auto [x, y] = proj(r);
        os << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << 0.05 * scale
           << "\" fill=\"#666666\"/>\n";
        os << "  <text x=\"" << x + 0.07 * scale << "\" y=\"" << y - 0.07 * scale
           << "\" font-size=\"" << 0.12 * scale << "\">" << to_string(r) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw io_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace gfan
