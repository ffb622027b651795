#pragma once

#include "gfan/fan.hpp"

#include <array>
#include <optional>
#include <vector>

namespace gfan {

// One triple (l, r, h) of the mutation datum. Only seven values occur.
struct MutationDatum {
    int l = 0;
    int r = 0;
    int h = 0;

    friend bool operator==(const MutationDatum& a, const MutationDatum& b) {
        return a.l == b.l && a.r == b.r && a.h == b.h;
    }
    friend bool operator!=(const MutationDatum& a, const MutationDatum& b) { return !(a == b); }
    friend bool operator<(const MutationDatum& a, const MutationDatum& b) {
        if (a.l != b.l) return a.l < b.l;
        if (a.r != b.r) return a.r < b.r;
        return a.h < b.h;
    }
};

bool admissible_triple(const MutationDatum& d);
const std::array<MutationDatum, 7>& admissible_triples();

// Full datum: entries for ordered pairs (1,2),(1,3),(2,1),(2,3),(3,1),(3,2).
struct DatumD {
    std::array<MutationDatum, 6> e{};

    static constexpr std::array<std::pair<int, int>, 6> pairs = {
        {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}};

    MutationDatum& at(int i, int j);
    const MutationDatum& at(int i, int j) const;

    friend bool operator==(const DatumD& a, const DatumD& b) { return a.e == b.e; }
    friend bool operator<(const DatumD& a, const DatumD& b) { return a.e < b.e; }
};

std::string to_string(const MutationDatum& d);
std::string to_string(const DatumD& d);

// Identifier of an orthant fan fragment: m in 0..13, the h13 sub-case for
// m = 10, and whether it is the (13)-mirrored variant d'(m).
struct OrthantFanId {
    int m = 0;
    int h10 = 0;      // only meaningful for m == 10
    bool mirrored = false;

    friend bool operator==(const OrthantFanId& a, const OrthantFanId& b) {
        return a.m == b.m && a.h10 == b.h10 && a.mirrored == b.mirrored;
    }
};

// Rays of the quadrant wall cone{e1, -e2} (plane x3 = 0) for the wall datum
// (l, r), ordered clockwise from e1 to -e2. Rank-3 vectors.
std::vector<Vec> quadrant_rays_12(int l, int r);
// Same for the wall cone{-e2, e3} (plane x1 = 0), ordered from e3 to -e2.
std::vector<Vec> quadrant_rays_32(int l, int r);
// Rank-2 version in cone{e1, -e2}.
std::vector<Vec> quadrant_rays(int l, int r);

bool admissible_wall(int l, int r);

// The pair (d12, d32) of the datum d(m).
std::pair<MutationDatum, MutationDatum> dm_datum(int m);

struct MinMaxCones {
    std::vector<Vec> sigma_min;  // [(1,-r12,0) | (0,-1,0) | (0,-r32,1)]
    std::vector<Vec> sigma_max;  // [(1,0,0) | (l'12,-1,l'32) | (0,0,1)]
    Vec v_min;
    Vec v_max;
};
MinMaxCones min_max_cones(const MutationDatum& d12, const MutationDatum& d32);

// The transcribed fragment: rays and maximal cones inside the orthant
// (+,-,+). For id.mirrored the (13)-swapped image is returned.
struct OrthantFragment {
    OrthantFanId id;
    std::vector<Vec> rays;
    std::vector<std::vector<int>> cones;  // indices into rays

    std::vector<std::vector<Vec>> cone_rays() const;
};
OrthantFragment orthant_fan(const OrthantFanId& id);

// The five data of non-realizable convex candidates.
std::vector<DatumD> excluded_data();

}  // namespace gfan
