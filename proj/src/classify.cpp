#include "gfan/classify.hpp"

#include "gfan/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace gfan {

DatumD act_datum(const GroupElement& g, const DatumD& d) {
    GroupElement inv = g.inverse();
    auto si = [&](int i) { return inv.perm[static_cast<std::size_t>(i - 1)] + 1; };
    DatumD out;
    for (const auto& [i, j] : DatumD::pairs) {
        if (g.sign == 1) {
            out.at(i, j) = d.at(si(i), si(j));
        } else {
            MutationDatum m = d.at(si(j), si(i));
            out.at(i, j) = MutationDatum{m.r, m.l, m.h};
        }
    }
    return out;
}

std::string serialize_datum(const DatumD& d) {
    std::ostringstream os;
    for (const MutationDatum& m : d.e) os << m.l << m.r << m.h;
    return os.str();
}

std::string canonical_datum_form(const DatumD& d) {
    std::string best;
    bool first = true;
    for (const GroupElement& g : full_group(3)) {
        std::string s = serialize_datum(act_datum(g, d));
        if (first || s < best) { best = std::move(s); first = false; }
    }
    return best;
}

DatumD canonical_datum_rep(const DatumD& d) {
    DatumD best = d;
    std::string bests = serialize_datum(d);
    for (const GroupElement& g : full_group(3)) {
        DatumD img = act_datum(g, d);
        std::string s = serialize_datum(img);
        if (s < bests) { bests = std::move(s); best = img; }
    }
    return best;
}

const std::vector<std::pair<SignVector, GroupElement>>& orthant_transports() {
    static const std::vector<std::pair<SignVector, GroupElement>> table = [] {
        auto mk = [](std::array<int, 3> perm, int sign) {
            GroupElement g;
            g.rank = 3;
            g.perm = perm;
            g.sign = sign;
            return g;
        };
        std::vector<std::pair<SignVector, GroupElement>> t = {
            {SignVector(1, -1, 1), mk({0, 1, 2}, 1)},
            {SignVector(-1, 1, 1), mk({1, 0, 2}, 1)},
            {SignVector(1, 1, -1), mk({0, 2, 1}, 1)},
            {SignVector(-1, 1, -1), mk({0, 1, 2}, -1)},
            {SignVector(1, -1, -1), mk({1, 0, 2}, -1)},
            {SignVector(-1, -1, 1), mk({0, 2, 1}, -1)},
        };
        for (const auto& [eps, g] : t) {
            SignVector img = act_sign(g, eps);
            if (!(img == SignVector(1, -1, 1)))
                throw structure_error("orthant_transports: table broken");
        }
        return t;
    }();
    return table;
}

std::optional<OrthantFanId> datum_to_orthant_id(const DatumD& d) {
    const MutationDatum d12 = d.at(1, 2);
    const MutationDatum d32 = d.at(3, 2);
    for (int m = 0; m <= 13; ++m) {
        auto [a, b] = dm_datum(m);
        if (d12 == a && d32 == b) {
            OrthantFanId id;
            id.m = m;
            id.mirrored = false;
            if (m == 10) id.h10 = d.at(1, 3).h;
            return id;
        }
    }
    for (int m = 0; m <= 13; ++m) {
        auto [a, b] = dm_datum(m);
        if (d12 == b && d32 == a) {
            OrthantFanId id;
            id.m = m;
            id.mirrored = true;
            if (m == 10) id.h10 = d.at(3, 1).h;
            return id;
        }
    }
    return std::nullopt;
}

std::optional<OrthantFanId> datum_to_orthant_id(const DatumD& d, const SignVector& eps) {
    for (const auto& [e, g] : orthant_transports())
        if (e == eps) return datum_to_orthant_id(act_datum(g, d));
    throw std::domain_error("datum_to_orthant_id: eps must be a mixed signature");
}

bool gen_a_constraints(const DatumD& d) {
    const MutationDatum d12 = d.at(1, 2), d13 = d.at(1, 3), d31 = d.at(3, 1), d32 = d.at(3, 2);
    const int h12 = d12.h, h32 = d32.h, h13 = d13.h, h31 = d31.h;
    const MutationDatum zero{0, 0, 0};

    // (0): any nonzero orthant value forces an arrow into vertex 2.
    if (!(d12 == zero && d32 == zero) && !(h12 == 1 || h32 == 1)) return false;

    int m = -1;
    for (int k = 0; k <= 13; ++k) {
        auto [a, b] = dm_datum(k);
        if (d12 == a && d32 == b) { m = k; break; }
    }
    if (m < 0) return true;  // mirrored values are constrained via (13)-images

    auto in = [&](const MutationDatum& x, std::initializer_list<MutationDatum> set) {
        for (const MutationDatum& s : set)
            if (x == s) return true;
        return false;
    };
    switch (m) {
        case 0: return true;
        case 1: return d31 == zero || h31 == 1;
        case 2: return d31 == zero && h13 == 0;
        case 3: return d31 == zero || h31 == 1;
        case 4: return in(d31, {MutationDatum{2, 1, 1}, MutationDatum{1, 1, 1}});
        case 5: return d31 == MutationDatum{1, 2, 1} && h13 == 0;
        case 6: return in(d31, {MutationDatum{2, 1, 1}, MutationDatum{1, 1, 1}});
        case 7:
            return !in(d31, {MutationDatum{2, 1, 1}, MutationDatum{2, 1, 0}}) &&
                   !in(d13, {MutationDatum{2, 1, 1}, MutationDatum{2, 1, 0}});
        case 8:
            return !in(d31, {MutationDatum{2, 1, 1}, MutationDatum{2, 1, 0}}) && !(d13 == zero);
        case 9: return !(d31 == zero) && !(d13 == zero);
        case 10:
            if (h13 == 0) return d31 == MutationDatum{2, 1, 1};
            return in(d31, {MutationDatum{2, 1, 1}, MutationDatum{1, 1, 1}});
        case 11: return d31 == MutationDatum{1, 2, 1} && h13 == 1;
        case 12:
            return in(d31, {MutationDatum{1, 1, 0}, MutationDatum{1, 2, 0}, zero}) && d13 == zero;
        case 13:
            return in(d31, {MutationDatum{1, 1, 0}, MutationDatum{1, 2, 0}, zero}) &&
                   d13 == MutationDatum{2, 1, 0};
    }
    return true;
}

bool admissible_datum(const DatumD& d) {
    for (const GroupElement& g : full_group(3)) {
        DatumD dg = act_datum(g, d);
        if (!datum_to_orthant_id(dg)) return false;
        if (!gen_a_constraints(dg)) return false;
    }
    return true;
}

bool gen_x_realizable(const DatumD& d) {
    for (const GroupElement& g : full_group(3)) {
        DatumD x = act_datum(g, d);
        if (x.at(1, 2) == MutationDatum{2, 1, 1} && x.at(1, 3) == MutationDatum{2, 1, 0} &&
            x.at(2, 3) == MutationDatum{2, 1, 1} && x.at(3, 2) == MutationDatum{1, 1, 1})
            return false;
        if (x.at(1, 2) == MutationDatum{2, 1, 1} && x.at(1, 3) == MutationDatum{1, 1, 0} &&
            x.at(2, 1) == MutationDatum{1, 1, 1} && x.at(2, 3) == MutationDatum{1, 2, 1} &&
            x.at(3, 2).h == 0)
            return false;
    }
    return true;
}

Fan assemble_fan(const DatumD& d) {
    if (!admissible_datum(d)) throw std::domain_error("assemble_fan: datum not admissible");
    std::vector<std::vector<Vec>> cones;
    cones.push_back({Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)});
    cones.push_back({Vec(-1, 0, 0), Vec(0, -1, 0), Vec(0, 0, -1)});
    for (const auto& [eps, g] : orthant_transports()) {
        DatumD dg = act_datum(g, d);
        auto id = datum_to_orthant_id(dg);
        if (!id) throw structure_error("assemble_fan: missing orthant id");
        OrthantFragment frag = orthant_fan(*id);
        GroupElement ginv = g.inverse();
        for (const auto& cr : frag.cone_rays()) {
            std::vector<Vec> mapped;
            for (const Vec& v : cr) mapped.push_back(act_vector(ginv, v));
            cones.push_back(std::move(mapped));
        }
    }
    Fan f = Fan::from_ray_cones(3, cones);
    // Wall consistency shows up as a facet-pairing failure.
    ValidityReport rep = validate(f);
    if (!rep.complete || !rep.fan_property)
        throw structure_error("assemble_fan: orthant fragments do not glue to a complete fan");
    return f;
}

Rank2Report enumerate_rank2() {
    const std::array<std::pair<int, int>, 4> walls = {{{0, 0}, {1, 1}, {1, 2}, {2, 1}}};
    Rank2Report rep;
    for (const auto& pm : walls)
        for (const auto& mp : walls) {
            // Rays of the (+,-) quadrant from the table; the (-,+) quadrant
            // is the antipodal image of its table rays.
            std::vector<Vec> ring;
            ring.push_back(Vec(0, 1));
            for (const Vec& v : quadrant_rays(pm.first, pm.second)) ring.push_back(v);
            // quadrant_rays ends at -e2; continue through (-,-) wall to -e1.
            ring.push_back(Vec(-1, 0));
            // then the (-,+) quadrant: antipodes of the (+,-) table rays of
            // mp run from -e1 to e2 in the same index order; keep the
            // interior ones.
            auto mp_rays = quadrant_rays(mp.first, mp.second);
            for (std::size_t k = 1; k + 1 < mp_rays.size(); ++k) ring.push_back(-mp_rays[k]);
            // consecutive pairs around the circle are the maximal cones
            std::vector<std::vector<Vec>> cones;
            for (std::size_t i = 0; i < ring.size(); ++i)
                cones.push_back({ring[i], ring[(i + 1) % ring.size()]});
            Rank2Fan rf;
            rf.quadrant_pm = pm;
            rf.quadrant_mp = mp;
            rf.fan = Fan::from_ray_cones(2, cones);
            rep.fans.push_back(std::move(rf));
        }
    std::set<std::string> classes;
    for (const Rank2Fan& rf : rep.fans) classes.insert(canonical_form(rf.fan));
    rep.class_forms.assign(classes.begin(), classes.end());
    return rep;
}

DatumD datum_from_index(std::size_t idx) {
    DatumD d;
    for (int k = 0; k < 6; ++k) {
        d.e[static_cast<std::size_t>(k)] = admissible_triples()[idx % 7];
        idx /= 7;
    }
    return d;
}

ClassificationReport enumerate_rank3(int jobs) {
    if (jobs < 1) jobs = 1;

    // Parallel admissibility scan with deterministic merge by index.
    std::vector<std::vector<std::size_t>> found(static_cast<std::size_t>(jobs));
    auto worker = [&](int t) {
        for (std::size_t idx = static_cast<std::size_t>(t); idx < kDatumSpace;
             idx += static_cast<std::size_t>(jobs)) {
            if (admissible_datum(datum_from_index(idx))) found[static_cast<std::size_t>(t)].push_back(idx);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    std::vector<std::size_t> admissible;
    for (auto& v : found) admissible.insert(admissible.end(), v.begin(), v.end());
    std::sort(admissible.begin(), admissible.end());

    // Orbit dedup on canonical datum forms.
    std::map<std::string, DatumD> orbit_reps;
    for (std::size_t idx : admissible) {
        DatumD d = datum_from_index(idx);
        orbit_reps.emplace(canonical_datum_form(d), canonical_datum_rep(d));
    }

    ClassificationReport rep;
    rep.admissible_data = admissible.size();
    rep.candidate_orbits = orbit_reps.size();

    std::set<std::string> fan_forms;
    for (const auto& [key, d] : orbit_reps) {
        OrbitEntry e;
        e.datum = d;
        e.fan = assemble_fan(d);
        e.canonical_fan = canonical_form(e.fan);
        e.realizable = gen_x_realizable(d);
        ConvexityResult cv = is_convex(e.fan);
        if (!cv.convex) throw structure_error("enumerate_rank3: assembled fan not convex");
        e.ordering_ok = cv.ordering_ok;
        e.templates_ok = all_ray_templates_ok(e.fan);
        e.ray_count = static_cast<int>(e.fan.rays().size());
        e.cone_count = static_cast<int>(e.fan.max_cones().size());
        fan_forms.insert(e.canonical_fan);
        rep.orbits.push_back(std::move(e));
    }
    for (const OrbitEntry& e : rep.orbits)
        (e.realizable ? rep.realizable : rep.excluded)++;
    rep.orbit_fan_dedup_agrees = fan_forms.size() == rep.orbits.size();
    return rep;
}

namespace {

// The labelled chains prescribed by the (r12, r32) wall data for the two
// maximal paths at -e2. alpha starts at the exchange of (0,-r32,1), beta at
// (1,-r12,0).
std::vector<std::vector<PathArrow>> expected_alpha_forms(int r12, int r32, bool& form_i_allowed) {
    std::vector<std::vector<PathArrow>> forms;
    auto arrow = [](Int over, Int under) { return PathArrow{over, under}; };
    forms.push_back({arrow(0, r32), arrow(0, r12)});  // form (i)
    form_i_allowed = true;
    if (r12 <= 1 && r32 <= 1) forms.push_back({arrow(1, r32), arrow(1, 0), arrow(1, r12)});
    if (r12 >= 1 && r32 >= 1) forms.push_back({arrow(1, r32 - 1), arrow(1, 1), arrow(1, r12 - 1)});
    if (r32 % 2 == 0 &&
        ((r12 == 0 && r32 == 0) || (r12 == 1 && r32 == 0) || (r12 == 1 && r32 == 2) ||
         (r12 == 2 && r32 == 2)))
        forms.push_back({arrow(2, 0), arrow(1, r32 / 2), arrow(2, 0), arrow(1, r12 - r32 / 2)});
    if (r12 % 2 == 0 &&
        ((r12 == 0 && r32 == 0) || (r12 == 0 && r32 == 1) || (r12 == 2 && r32 == 1) ||
         (r12 == 2 && r32 == 2)))
        forms.push_back({arrow(1, r32 - r12 / 2), arrow(2, 0), arrow(1, r12 / 2), arrow(2, 0)});
    return forms;
}

bool chain_equals(const LabeledPath& p, const std::vector<PathArrow>& form) {
    if (p.arrows.size() != form.size()) return false;
    for (std::size_t i = 0; i < form.size(); ++i)
        if (!(p.arrows[i] == form[i])) return false;
    return true;
}

}  // namespace

bool e2_paths_consistent(const Fan& f, const DatumD& d) {
    const int r12 = d.at(1, 2).r;
    const int r32 = d.at(3, 2).r;
    const int h13 = d.at(1, 3).h;
    const int h31 = d.at(3, 1).h;

    auto [p, q] = maximal_paths_at_ray(f, Vec(0, -1, 0));
    // alpha exchanges (0,-r32,1) first, beta exchanges (1,-r12,0).
    const Vec alpha_first(0, -r32, 1);
    const Vec beta_first(1, -r12, 0);
    const LabeledPath* alpha = nullptr;
    const LabeledPath* beta = nullptr;
    if (p.first_exchanged == alpha_first && q.first_exchanged == beta_first) {
        alpha = &p;
        beta = &q;
    } else if (q.first_exchanged == alpha_first && p.first_exchanged == beta_first) {
        alpha = &q;
        beta = &p;
    } else {
        return false;
    }

    bool dummy = false;
    auto aforms = expected_alpha_forms(r12, r32, dummy);
    int amatch = -1;
    for (std::size_t i = 0; i < aforms.size(); ++i)
        if (chain_equals(*alpha, aforms[i])) { amatch = static_cast<int>(i); break; }
    // beta follows the mirrored statement with r12 and r32 swapped.
    auto bforms = expected_alpha_forms(r32, r12, dummy);
    int bmatch = -1;
    for (std::size_t i = 0; i < bforms.size(); ++i)
        if (chain_equals(*beta, bforms[i])) { bmatch = static_cast<int>(i); break; }
    if (amatch < 0 || bmatch < 0) return false;
    // Form (i) appears exactly when h13 = 0 (alpha) resp. h31 = 0 (beta).
    if ((amatch == 0) != (h13 == 0)) return false;
    if ((bmatch == 0) != (h31 == 0)) return false;
    return true;
}

}  // namespace gfan
