#pragma once

#include "gfan/classify.hpp"

#include <string>

namespace gfan {

struct parse_error : std::runtime_error {
    int line = 0;
    int column = 0;
    parse_error(const std::string& msg, int l, int c) : std::runtime_error(msg), line(l), column(c) {}
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shared fan schema: {"rank": int, "rays": [[int,...],...],
// "max_cones": [[int,...],...]}. Ray order defines ids; output rays are
// sorted lexicographically and cones sorted, so bytes are stable.
std::string fan_to_json(const Fan& f);
Fan fan_from_json(const std::string& text);

std::string polytope_to_json(const GPolytope& p);

std::string catalog_to_json();
std::string rank2_report_to_json(const Rank2Report& rep);
std::string rank3_report_to_json(const ClassificationReport& rep);
std::string rank3_summary_csv(const ClassificationReport& rep);

std::string datum_to_json(const DatumD& d);

// Axonometric drawing of an orthant fragment:
// e1 to the lower left, e2 right, e3 up.
std::string fragment_to_svg(const OrthantFragment& frag, double scale);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace gfan
