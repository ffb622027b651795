#pragma once

#include "gfan/catalog.hpp"
#include "gfan/polytope.hpp"
#include "gfan/symmetry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gfan {

// Datum transformed by g = (s, z): index relabeling for z = 1, l/r swap
// plus transposition for z = -1.
DatumD act_datum(const GroupElement& g, const DatumD& d);

std::string serialize_datum(const DatumD& d);
std::string canonical_datum_form(const DatumD& d);
DatumD canonical_datum_rep(const DatumD& d);

// Fixed transports g_eps with g_eps . eps = (+,-,+), z = +1 for one minus
// sign, z = -1 otherwise.
const std::vector<std::pair<SignVector, GroupElement>>& orthant_transports();

// Which catalog fragment the (+,-,+) orthant of a fan with this datum
// takes, if any: d(m), or the (13)-mirrored d'(m).
std::optional<OrthantFanId> datum_to_orthant_id(const DatumD& d);
std::optional<OrthantFanId> datum_to_orthant_id(const DatumD& d, const SignVector& eps);

// Constraints of a g-convex datum on the (+,-,+) orthant value.
bool gen_a_constraints(const DatumD& d);

// For all 12 group images: the orthant value is some d(m)/d'(m) and the
// gen-a constraints hold.
bool admissible_datum(const DatumD& d);

// False when some group image matches one of the two excluded patterns.
bool gen_x_realizable(const DatumD& d);

// Glue the positive cone, the negative cone and the six transported
// orthant fragments. Throws when a wall mismatch produces an invalid fan.
Fan assemble_fan(const DatumD& d);

// ---- rank 2 ----

struct Rank2Fan {
    std::pair<int, int> quadrant_pm;  // (l,r) of the (+,-) quadrant
    std::pair<int, int> quadrant_mp;  // (l,r) of the (-,+) quadrant
    Fan fan;
};

struct Rank2Report {
    std::vector<Rank2Fan> fans;              // all 16
    std::vector<std::string> class_forms;    // 7 canonical forms, sorted
};
Rank2Report enumerate_rank2();

// ---- rank 3 ----

struct OrbitEntry {
    DatumD datum;                 // canonical representative
    Fan fan;
    std::string canonical_fan;    // canonical byte string of the fan
    bool realizable = false;      // gen-x verdict
    bool ordering_ok = false;     // all exchange labels nonnegative
    bool templates_ok = false;    // every ray-star matches a template pair
    int ray_count = 0;
    int cone_count = 0;
};

struct ClassificationReport {
    std::vector<OrbitEntry> orbits;    // sorted by canonical datum
    std::size_t admissible_data = 0;   // before orbit dedup
    std::size_t candidate_orbits = 0;  // 66
    std::size_t realizable = 0;        // 61
    std::size_t excluded = 0;          // 5
    bool orbit_fan_dedup_agrees = false;  // datum orbits <-> fan canonical forms
};

ClassificationReport enumerate_rank3(int jobs = 1);

// Total number of data scanned: 7^6.
constexpr std::size_t kDatumSpace = 117649;
DatumD datum_from_index(std::size_t idx);

// The alpha/beta chains at -e2 agree with the (r12, r32)-labelled forms;
// in particular form (i) appears exactly when h13 = 0 (alpha) resp.
// h31 = 0 (beta).
bool e2_paths_consistent(const Fan& f, const DatumD& d);

}  // namespace gfan
