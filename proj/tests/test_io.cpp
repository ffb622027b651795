#include "gfan/json_io.hpp"
#include "gfan/polytope.hpp"

#include <doctest.h>

using namespace gfan;

namespace {

Fan orthant_fan_8() {
    std::vector<std::vector<Vec>> cones;
    for (int a : {1, -1})
        for (int b : {1, -1})
            for (int c : {1, -1})
                cones.push_back({Vec(a, 0, 0), Vec(0, b, 0), Vec(0, 0, c)});
    return Fan::from_ray_cones(3, cones);
}

}  // namespace

TEST_CASE("fan JSON round trip") {
    Fan f = orthant_fan_8();
    std::string s = fan_to_json(f);
    Fan g = fan_from_json(s);
    CHECK(f == g);
    // stable bytes
    CHECK(fan_to_json(g) == s);
}

TEST_CASE("parse errors carry a position") {
    try {
        fan_from_json("{\n  \"rank\": 3,\n  broken\n}");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
        CHECK(e.column >= 1);
    }
    CHECK_THROWS_AS(fan_from_json("{\"rank\": 5, \"rays\": [], \"max_cones\": []}"), parse_error);
    CHECK_THROWS_AS(fan_from_json("[1,2,3]"), parse_error);
    CHECK_THROWS_AS(fan_from_json("{\"rank\": 3, \"rays\": [[1,0]], \"max_cones\": []}"),
                    parse_error);
}

TEST_CASE("polytope serialization") {
    Fan f = orthant_fan_8();
    GPolytope p = g_polytope(f);
    std::string s = polytope_to_json(p);
    CHECK(s.find("\"vertices\"") != std::string::npos);
    CHECK(s.find("\"normals\"") != std::string::npos);
}

TEST_CASE("catalog export contains the fifteen fragments") {
    std::string s = catalog_to_json();
    CHECK(s.find("\"d10_0\"") != std::string::npos);
    CHECK(s.find("\"d10_1\"") != std::string::npos);
    CHECK(s.find("\"d13\"") != std::string::npos);
    CHECK(s.find("dm_table") != std::string::npos);
    // byte-stable
    CHECK(catalog_to_json() == s);
}

TEST_CASE("svg rendering smoke test") {
    OrthantFragment frag = orthant_fan(OrthantFanId{5, 0, false});
    std::string svg = fragment_to_svg(frag, 100.0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<line") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
}

TEST_CASE("summary csv shape") {
    ClassificationReport rep;
    OrbitEntry e;
    e.datum = DatumD{};
    e.fan = orthant_fan_8();
    e.realizable = true;
    e.ray_count = 6;
    e.cone_count = 8;
    rep.orbits.push_back(e);
    std::string csv = rank3_summary_csv(rep);
    CHECK(csv == "datum,ray_count,cone_count,realizable\n000000000000000000,6,8,1\n");
}
