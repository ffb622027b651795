#include "gfan/catalog.hpp"

#include <sstream>

namespace gfan {

const std::array<MutationDatum, 7>& admissible_triples() {
    static const std::array<MutationDatum, 7> k = {
        MutationDatum{0, 0, 0}, MutationDatum{1, 1, 0}, MutationDatum{1, 2, 0},
        MutationDatum{2, 1, 0}, MutationDatum{1, 1, 1}, MutationDatum{1, 2, 1},
        MutationDatum{2, 1, 1}};
    return k;
}

bool admissible_triple(const MutationDatum& d) {
    for (const MutationDatum& t : admissible_triples())
        if (t == d) return true;
    return false;
}

MutationDatum& DatumD::at(int i, int j) {
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (pairs[k].first == i && pairs[k].second == j) return e[k];
    throw std::domain_error("DatumD::at: bad index pair");
}
const MutationDatum& DatumD::at(int i, int j) const {
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (pairs[k].first == i && pairs[k].second == j) return e[k];
    throw std::domain_error("DatumD::at: bad index pair");
}

std::string to_string(const MutationDatum& d) {
    std::ostringstream os;
    os << '(' << d.l << ',' << d.r << ',' << d.h << ')';
    return os.str();
}

std::string to_string(const DatumD& d) {
    std::ostringstream os;
    for (std::size_t k = 0; k < d.e.size(); ++k) {
        if (k) os << ' ';
        os << 'd' << DatumD::pairs[k].first << DatumD::pairs[k].second << '=' << to_string(d.e[k]);
    }
    return os.str();
}

bool admissible_wall(int l, int r) {
    return (l == 0 && r == 0) || (l == 1 && r == 1) || (l == 1 && r == 2) || (l == 2 && r == 1);
}

std::vector<Vec> quadrant_rays(int l, int r) {
    if (!admissible_wall(l, r)) throw std::domain_error("quadrant_rays: inadmissible (l,r)");
    if (l == 0) return {Vec(1, 0), Vec(0, -1)};
    if (l == 1 && r == 1) return {Vec(1, 0), Vec(1, -1), Vec(0, -1)};
    if (l == 1 && r == 2) return {Vec(1, 0), Vec(1, -1), Vec(1, -2), Vec(0, -1)};
    return {Vec(1, 0), Vec(2, -1), Vec(1, -1), Vec(0, -1)};
}

std::vector<Vec> quadrant_rays_12(int l, int r) {
    std::vector<Vec> out;
    for (const Vec& v : quadrant_rays(l, r)) out.push_back(Vec(v[0], v[1], 0));
    return out;
}

std::vector<Vec> quadrant_rays_32(int l, int r) {
    // Same table with e1 replaced by e3: (a,b) -> (0,b,a).
    std::vector<Vec> out;
    for (const Vec& v : quadrant_rays(l, r)) out.push_back(Vec(0, v[1], v[0]));
    return out;
}

std::pair<MutationDatum, MutationDatum> dm_datum(int m) {
    switch (m) {
        case 0: return {{0, 0, 0}, {0, 0, 0}};
        case 1: return {{1, 1, 1}, {0, 0, 0}};
        case 2: return {{1, 2, 1}, {0, 0, 0}};
        case 3: return {{2, 1, 1}, {0, 0, 0}};
        case 4: return {{1, 1, 1}, {1, 1, 0}};
        case 5: return {{1, 1, 1}, {1, 2, 0}};
        case 6: return {{2, 1, 1}, {2, 1, 0}};
        case 7: return {{1, 1, 1}, {1, 1, 1}};
        case 8: return {{2, 1, 1}, {1, 1, 1}};
        case 9: return {{2, 1, 1}, {2, 1, 1}};
        case 10: return {{1, 2, 1}, {1, 1, 0}};
        case 11: return {{1, 2, 1}, {1, 2, 0}};
        case 12: return {{1, 1, 1}, {1, 2, 1}};
        case 13: return {{2, 1, 1}, {1, 2, 1}};
        default: throw std::domain_error("dm_datum: m out of range");
    }
}

MinMaxCones min_max_cones(const MutationDatum& d12, const MutationDatum& d32) {
    if (!admissible_triple(d12) || !admissible_triple(d32))
        throw std::domain_error("min_max_cones: inadmissible datum");
    MinMaxCones mm;
    mm.sigma_min = {Vec(1, -d12.r, 0), Vec(0, -1, 0), Vec(0, -d32.r, 1)};
    int lp12 = 0, lp32 = 0;
    if (d12.h == 1 && d32.h == 0) lp12 = d12.l;
    else if (d12.h == 0 && d32.h == 1) lp32 = d32.l;
    else if (d12.h == 1 && d32.h == 1) { lp12 = 1; lp32 = 1; }
    mm.sigma_max = {Vec(1, 0, 0), Vec(lp12, -1, lp32), Vec(0, 0, 1)};
    mm.v_min = Vec(1 - d12.r, -1, 1 - d32.r);
    mm.v_max = Vec(1, lp12 + lp32 - 1, 1);
    return mm;
}

namespace {

struct RawFragment {
    std::vector<Vec> rays;
    std::vector<std::vector<int>> cones;
};

// Fragment tables: ray coordinates and triangulated maximal cones.
const RawFragment& raw_fragment(int m, int h10) {
    static const RawFragment f0 = {{{1, 0, 0}, {0, 0, 1}, {0, -1, 0}}, {{0, 1, 2}}};
    static const RawFragment f1 = {{{1, 0, 0}, {1, -1, 0}, {0, 0, 1}, {0, -1, 0}},
                                   {{0, 1, 2}, {1, 2, 3}}};
    static const RawFragment f2 = {{{1, 0, 0}, {1, -1, 0}, {0, 0, 1}, {1, -2, 0}, {0, -1, 0}},
                                   {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}};
    static const RawFragment f3 = {{{1, 0, 0}, {2, -1, 0}, {0, 0, 1}, {1, -1, 0}, {0, -1, 0}},
                                   {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}};
    static const RawFragment f4 = {{{1, 0, 0}, {1, -1, 0}, {0, 0, 1}, {0, -1, 1}, {0, -1, 0}},
                                   {{0, 1, 2}, {1, 2, 3}, {1, 3, 4}}};
    static const RawFragment f5 = {
        {{1, 0, 0}, {1, -1, 0}, {0, 0, 1}, {0, -1, 1}, {0, -2, 1}, {0, -1, 0}},
        {{0, 1, 2}, {1, 2, 3}, {1, 3, 4}, {1, 4, 5}}};
    static const RawFragment f6 = {
        {{1, 0, 0}, {2, -1, 0}, {0, 0, 1}, {1, -1, 1}, {0, -1, 2}, {1, -1, 0}, {0, -1, 1}, {0, -1, 0}},
        {{0, 1, 2}, {1, 2, 3}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {5, 6, 7}}};
    static const RawFragment f7 = {
        {{1, 0, 0}, {1, -1, 1}, {0, 0, 1}, {0, -1, 1}, {1, -1, 0}, {0, -1, 0}},
        {{0, 1, 2}, {0, 1, 4}, {1, 2, 3}, {1, 3, 4}, {3, 4, 5}}};
    static const RawFragment f8 = {
        {{1, 0, 0}, {1, -1, 1}, {0, 0, 1}, {0, -1, 1}, {2, -1, 0}, {1, -1, 0}, {0, -1, 0}},
        {{0, 1, 2}, {0, 1, 4}, {1, 2, 3}, {1, 3, 5}, {1, 4, 5}, {3, 5, 6}}};
    static const RawFragment f9 = {
        {{1, 0, 0}, {1, -1, 1}, {0, 0, 1}, {2, -1, 0}, {0, -1, 2}, {1, -1, 0}, {0, -1, 1}, {0, -1, 0}},
        {{0, 1, 2}, {0, 1, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6}, {5, 6, 7}}};
    static const RawFragment f10_0 = {
        {{1, 0, 0}, {1, -1, 0}, {0, 0, 1}, {0, -1, 1}, {1, -2, 0}, {0, -1, 0}},
        {{0, 1, 2}, {1, 2, 4}, {2, 3, 4}, {3, 4, 5}}};
    static const RawFragment f10_1 = {
        {{1, 0, 0}, {1, -1, 0}, {0, 0, 1}, {0, -1, 1}, {1, -2, 0}, {0, -1, 0}},
        {{0, 1, 2}, {1, 2, 3}, {1, 3, 4}, {3, 4, 5}}};
    static const RawFragment f11 = {
        {{1, 0, 0}, {1, -1, 0}, {0, 0, 1}, {0, -1, 1}, {0, -2, 1}, {1, -2, 0}, {0, -1, 0}},
        {{0, 1, 2}, {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {4, 5, 6}}};
    static const RawFragment f12 = {
        {{1, 0, 0}, {1, -1, 1}, {0, 0, 1}, {2, -2, 1}, {0, -1, 1}, {1, -1, 0}, {1, -2, 1}, {0, -2, 1}, {0, -1, 0}},
        {{0, 1, 2}, {0, 1, 3}, {0, 3, 5}, {1, 2, 4}, {1, 3, 4}, {3, 4, 6}, {3, 5, 6}, {4, 6, 7}, {5, 6, 7}, {5, 7, 8}}};
    static const RawFragment f13 = {
        {{1, 0, 0}, {1, -1, 1}, {0, 0, 1}, {0, -1, 1}, {2, -2, 1}, {2, -1, 0}, {1, -2, 1}, {1, -1, 0}, {0, -2, 1}, {0, -1, 0}},
        {{0, 1, 2}, {0, 1, 4}, {0, 4, 5}, {1, 2, 3}, {1, 3, 4}, {3, 4, 6}, {3, 6, 8}, {4, 5, 7}, {4, 6, 7}, {6, 7, 8}, {7, 8, 9}}};
    switch (m) {
        case 0: return f0;
        case 1: return f1;
        case 2: return f2;
        case 3: return f3;
        case 4: return f4;
        case 5: return f5;
        case 6: return f6;
        case 7: return f7;
        case 8: return f8;
        case 9: return f9;
        case 10: return h10 == 0 ? f10_0 : f10_1;
        case 11: return f11;
        case 12: return f12;
        case 13: return f13;
        default: throw std::domain_error("orthant_fan: m out of range");
    }
}

Vec mirror13(const Vec& v) { return Vec(v[2], v[1], v[0]); }

}  // namespace

std::vector<std::vector<Vec>> OrthantFragment::cone_rays() const {
    std::vector<std::vector<Vec>> out;
    for (const auto& c : cones) {
        std::vector<Vec> rs;
        for (int i : c) rs.push_back(rays[static_cast<std::size_t>(i)]);
        out.push_back(std::move(rs));
    }
    return out;
}

OrthantFragment orthant_fan(const OrthantFanId& id) {
    const RawFragment& raw = raw_fragment(id.m, id.h10);
    OrthantFragment out;
    out.id = id;
    out.rays = raw.rays;
    out.cones = raw.cones;
    if (id.mirrored)
        for (Vec& r : out.rays) r = mirror13(r);
    return out;
}

std::vector<DatumD> excluded_data() {
    auto mk = [](std::array<std::array<int, 3>, 6> rows) {
        DatumD d;
        for (std::size_t k = 0; k < 6; ++k) d.e[k] = MutationDatum{rows[k][0], rows[k][1], rows[k][2]};
        return d;
    };
    // Entries in order d12, d13, d21, d23, d31, d32.
    return {
        mk({{{2, 1, 1}, {1, 1, 0}, {1, 1, 1}, {1, 2, 1}, {0, 0, 0}, {0, 0, 0}}}),
        mk({{{2, 1, 1}, {2, 1, 0}, {0, 0, 0}, {2, 1, 1}, {0, 0, 0}, {1, 1, 1}}}),
        mk({{{2, 1, 1}, {1, 1, 0}, {1, 1, 1}, {1, 2, 1}, {1, 1, 1}, {0, 0, 0}}}),
        mk({{{2, 1, 1}, {1, 1, 0}, {1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {2, 1, 0}}}),
        mk({{{2, 1, 1}, {2, 1, 0}, {1, 1, 1}, {2, 1, 1}, {0, 0, 0}, {1, 1, 1}}}),
    };
}

}  // namespace gfan
