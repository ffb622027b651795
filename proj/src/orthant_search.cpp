#include "gfan/orthant_search.hpp"

#include "gfan/polytope.hpp"
#include "gfan/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gfan {

namespace {

using ConeKey = std::array<Vec, 3>;  // sorted ray triple

ConeKey key_of(std::vector<Vec> rays) {
    std::sort(rays.begin(), rays.end());
    return {rays[0], rays[1], rays[2]};
}

// Exact disjointness of the open projected triangles of two cones within
// one orthant (central projection; orientation tests are 3x3 dets).
bool tri_disjoint(const ConeKey& t1, const ConeKey& t2) {
    auto ccw = [](ConeKey t) {
        if (det3(t[0], t[1], t[2]) < 0) std::swap(t[1], t[2]);
        return t;
    };
    ConeKey a = ccw(t1), b = ccw(t2);
    for (int pass = 0; pass < 2; ++pass) {
        const ConeKey& t = pass == 0 ? a : b;
        const ConeKey& o = pass == 0 ? b : a;
        for (int i = 0; i < 3; ++i) {
            const Vec& p = t[static_cast<std::size_t>(i)];
            const Vec& q = t[static_cast<std::size_t>((i + 1) % 3)];
            bool all_out = true;
            for (const Vec& x : o)
                if (det3(p, q, x) > 0) { all_out = false; break; }
            if (all_out) return true;
        }
    }
    return false;
}

struct WallLabels {
    Int a1 = 0, a2 = 0;  // on the sorted shared rays
};

std::optional<WallLabels> wall_labels(const ConeKey& c1, const ConeKey& c2) {
    std::vector<Vec> shared;
    Vec x{}, y{};
    bool have_x = false, have_y = false;
    for (const Vec& v : c1) {
        bool in2 = std::find(c2.begin(), c2.end(), v) != c2.end();
        if (in2) shared.push_back(v);
        else { x = v; have_x = true; }
    }
    for (const Vec& v : c2)
        if (std::find(c1.begin(), c1.end(), v) == c1.end()) { y = v; have_y = true; }
    if (shared.size() != 2 || !have_x || !have_y) return std::nullopt;
    Vec s = x + y;
    Int d = det3(x, shared[0], shared[1]);
    Int c0 = det3(s, shared[0], shared[1]);
    Int c1l = det3(x, s, shared[1]);
    Int c2l = det3(x, shared[0], s);
    if (d == 0 || c0 % d != 0 || c0 / d != 0 || c1l % d != 0 || c2l % d != 0) return std::nullopt;
    return WallLabels{c1l / d, c2l / d};
}

bool labels_admissible(const WallLabels& w) {
    if (checked_add(w.a1, w.a2) > 2) return false;
    if (w.a1 == 2 && w.a2 != 0) return false;
    if (w.a2 == 2 && w.a1 != 0) return false;
    return true;
}

bool on_orthant_wall(const Vec& a, const Vec& b) {
    return (a[2] == 0 && b[2] == 0) || (a[0] == 0 && b[0] == 0) || (a[1] == 0 && b[1] == 0);
}

std::optional<bool> oriented_from(const Vec& x, const Vec& t1, const Vec& t2) {
    Vec n(checked_sub(checked_mul(t1[1], t2[2]), checked_mul(t1[2], t2[1])),
          checked_sub(checked_mul(t1[2], t2[0]), checked_mul(t1[0], t2[2])),
          checked_sub(checked_mul(t1[0], t2[1]), checked_mul(t1[1], t2[0])));
    Int s = checked_add(checked_add(n[0], n[1]), n[2]);
    if (s == 0) return std::nullopt;
    if (s < 0) n = -n;
    Int side = dot(x, n);
    if (side == 0) return std::nullopt;
    return side > 0;
}

// Consecutive-over-pair rule of the path templates on the chosen cones.
bool consecutive_rule_ok(const std::vector<ConeKey>& cones) {
    struct Ev {
        Int over;
        bool incoming;
    };
    std::map<std::pair<ConeKey, Vec>, std::vector<Ev>> by_ray;
    const std::set<std::pair<Int, Int>> allow = {{0, 0}, {1, 1}, {1, 2}, {2, 1}};
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            auto wl = wall_labels(cones[i], cones[j]);
            if (!wl) continue;
            std::vector<Vec> shared;
            for (const Vec& v : cones[i])
                if (std::find(cones[j].begin(), cones[j].end(), v) != cones[j].end())
                    shared.push_back(v);
            Vec x{};
            for (const Vec& v : cones[i])
                if (std::find(shared.begin(), shared.end(), v) == shared.end()) x = v;
            auto fwd = oriented_from(x, shared[0], shared[1]);
            if (!fwd) return false;
            const ConeKey& src = *fwd ? cones[i] : cones[j];
            const ConeKey& dst = *fwd ? cones[j] : cones[i];
            by_ray[{dst, shared[0]}].push_back({wl->a2, true});
            by_ray[{dst, shared[1]}].push_back({wl->a1, true});
            by_ray[{src, shared[0]}].push_back({wl->a2, false});
            by_ray[{src, shared[1]}].push_back({wl->a1, false});
        }
    for (const auto& [k, evs] : by_ray)
        for (const Ev& in : evs)
            for (const Ev& out : evs) {
                if (!in.incoming || out.incoming) continue;
                if (!allow.count({in.over, out.over})) return false;
            }
    return true;
}

// Transported min/max normals of all six mixed orthants of a host with
// datum d, plus the normals of the positive and negative cones. Every ray
// of a convex host satisfies <r, n> <= 1 for each of these.
std::vector<HalfSpace> host_min_max_normals(const DatumD& d) {
    std::vector<HalfSpace> out = {HalfSpace{Vec(1, 1, 1)}, HalfSpace{Vec(-1, -1, -1)}};
    for (const auto& [eps, g] : orthant_transports()) {
        DatumD dg = act_datum(g, d);
        MinMaxCones mm = min_max_cones(dg.at(1, 2), dg.at(3, 2));
        GroupElement ginv = g.inverse();
        out.push_back(HalfSpace{act_vector(ginv, mm.v_min)});
        out.push_back(HalfSpace{act_vector(ginv, mm.v_max)});
    }
    return out;
}

// All orthant tilings from a finite candidate pool, subject to the wall,
// min/max, label and template constraints.
std::vector<std::set<ConeKey>> search_pool(const MutationDatum& d12, const MutationDatum& d32,
                                           const std::vector<Vec>& cands) {
    MinMaxCones mm = min_max_cones(d12, d32);
    std::vector<Vec> wall12 = quadrant_rays_12(d12.l, d12.r);
    std::vector<Vec> wall32 = quadrant_rays_32(d32.l, d32.r);

    std::vector<ConeKey> all_cones;
    const int n = static_cast<int>(cands.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Int d = det3(cands[static_cast<std::size_t>(i)], cands[static_cast<std::size_t>(j)],
                             cands[static_cast<std::size_t>(k)]);
                if (d == 1 || d == -1)
                    all_cones.push_back(key_of({cands[static_cast<std::size_t>(i)],
                                                cands[static_cast<std::size_t>(j)],
                                                cands[static_cast<std::size_t>(k)]}));
            }
    std::sort(all_cones.begin(), all_cones.end());

    using Facet = std::pair<Vec, Vec>;
    auto cone_facets = [](const ConeKey& c) {
        return std::array<Facet, 3>{Facet{c[0], c[1]}, Facet{c[0], c[2]}, Facet{c[1], c[2]}};
    };
    std::map<Facet, std::vector<int>> fmap;
    for (std::size_t ci = 0; ci < all_cones.size(); ++ci)
        for (const Facet& f : cone_facets(all_cones[ci])) fmap[f].push_back(static_cast<int>(ci));

    const ConeKey cmin = key_of(mm.sigma_min);
    const ConeKey cmax = key_of(mm.sigma_max);
    auto find_cone = [&](const ConeKey& c) -> int {
        auto it = std::lower_bound(all_cones.begin(), all_cones.end(), c);
        if (it == all_cones.end() || !(*it == c)) return -1;
        return static_cast<int>(it - all_cones.begin());
    };
    const int imin = find_cone(cmin);
    const int imax = find_cone(cmax);
    if (imin < 0 || imax < 0) return {};

    std::set<std::set<int>> visited;
    std::vector<std::set<ConeKey>> results;

    auto dfs = [&](auto&& self, std::set<int>& chosen, std::set<Facet>& open) -> void {
        if (visited.count(chosen)) return;
        visited.insert(chosen);
        if (open.empty()) {
            if (!chosen.count(imin)) return;
            std::set<Vec> used;
            for (int ci : chosen)
                for (const Vec& v : all_cones[static_cast<std::size_t>(ci)]) used.insert(v);
            for (const Vec& w : wall12)
                if (!used.count(w)) return;
            for (const Vec& w : wall32)
                if (!used.count(w)) return;
            std::vector<ConeKey> keys;
            for (int ci : chosen) keys.push_back(all_cones[static_cast<std::size_t>(ci)]);
            if (!consecutive_rule_ok(keys)) return;
            std::set<ConeKey> frag(keys.begin(), keys.end());
            results.push_back(std::move(frag));
            return;
        }
        Facet best{};
        std::vector<int> best_opts;
        bool first = true;
        for (const Facet& f : open) {
            int owner = -1;
            for (int ci : chosen) {
                const auto& oc = all_cones[static_cast<std::size_t>(ci)];
                if (std::find(oc.begin(), oc.end(), f.first) != oc.end() &&
                    std::find(oc.begin(), oc.end(), f.second) != oc.end())
                    owner = ci;
            }
            std::vector<int> opts;
            for (int ci : fmap[f]) {
                if (ci == owner) continue;
                auto wl = wall_labels(all_cones[static_cast<std::size_t>(owner)],
                                      all_cones[static_cast<std::size_t>(ci)]);
                if (!wl || !labels_admissible(*wl)) continue;
                bool clash = false;
                for (int o : chosen)
                    if (!tri_disjoint(all_cones[static_cast<std::size_t>(ci)],
                                      all_cones[static_cast<std::size_t>(o)])) {
                        clash = true;
                        break;
                    }
                if (!clash) opts.push_back(ci);
            }
            if (first || opts.size() < best_opts.size()) {
                best = f;
                best_opts = std::move(opts);
                first = false;
                if (best_opts.empty()) break;
            }
        }
        for (int ci : best_opts) {
            std::set<Facet> next_open = open;
            next_open.erase(best);
            bool ok = true;
            for (const Facet& f2 : cone_facets(all_cones[static_cast<std::size_t>(ci)])) {
                if (f2 == best || on_orthant_wall(f2.first, f2.second)) continue;
                int partner = -1;
                for (int o : chosen) {
                    const auto& oc = all_cones[static_cast<std::size_t>(o)];
                    if (std::find(oc.begin(), oc.end(), f2.first) != oc.end() &&
                        std::find(oc.begin(), oc.end(), f2.second) != oc.end())
                        partner = o;
                }
                if (partner >= 0) {
                    auto wl = wall_labels(all_cones[static_cast<std::size_t>(partner)],
                                          all_cones[static_cast<std::size_t>(ci)]);
                    if (!wl || !labels_admissible(*wl)) { ok = false; break; }
                    if (next_open.count(f2)) next_open.erase(f2);
                    else { ok = false; break; }
                } else {
                    next_open.insert(f2);
                }
            }
            if (!ok) continue;
            std::set<int> next_chosen = chosen;
            next_chosen.insert(ci);
            self(self, next_chosen, next_open);
        }
    };

    std::set<int> chosen = {imax};
    std::set<Facet> open;
    for (const Facet& f : cone_facets(cmax))
        if (!on_orthant_wall(f.first, f.second)) open.insert(f);
    dfs(dfs, chosen, open);
    return results;
}

std::vector<Vec> pool_for_datum(const DatumD& d, const MutationDatum& d12,
                                const MutationDatum& d32) {
    std::vector<Vec> wall12 = quadrant_rays_12(d12.l, d12.r);
    std::vector<Vec> wall32 = quadrant_rays_32(d32.l, d32.r);
    std::set<Vec> wall12_set(wall12.begin(), wall12.end());
    std::set<Vec> wall32_set(wall32.begin(), wall32.end());
    std::vector<Vec> cands;
    for (const Vec& p : lattice_points_in_orthant(host_min_max_normals(d), SignVector(1, -1, 1))) {
        if (p != make_primitive(p)) continue;
        if (p[2] == 0 && !wall12_set.count(p)) continue;
        if (p[0] == 0 && !wall32_set.count(p)) continue;
        cands.push_back(p);
    }
    return cands;
}

std::vector<DatumD> data_with_value(const MutationDatum& d12, const MutationDatum& d32) {
    std::vector<DatumD> out;
    for (std::size_t idx = 0; idx < kDatumSpace; ++idx) {
        DatumD d = datum_from_index(idx);
        if (d.at(1, 2) == d12 && d.at(3, 2) == d32 && admissible_datum(d)) out.push_back(d);
    }
    return out;
}

FragmentCones to_fragment(const std::set<ConeKey>& frag) {
    std::vector<std::vector<Vec>> out;
    for (const ConeKey& c : frag) out.push_back({c[0], c[1], c[2]});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<FragmentCones> search_orthant_fragments(const MutationDatum& d12,
                                                    const MutationDatum& d32) {
    // Quantify over the admissible host data carrying this orthant value;
    // each fixes a bounded candidate region via the transported min/max
    // normals of all six orthants.
    std::set<FragmentCones> uniq;
    for (const DatumD& d : data_with_value(d12, d32)) {
        auto cands = pool_for_datum(d, d12, d32);
        for (const auto& frag : search_pool(d12, d32, cands)) uniq.insert(to_fragment(frag));
    }
    return {uniq.begin(), uniq.end()};
}

namespace {

Fan assemble_with_fragments(const DatumD& d,
                            const std::map<std::pair<int, int>, std::vector<FragmentCones>>& cand,
                            const std::vector<int>& choice) {
    std::vector<std::vector<Vec>> cones;
    cones.push_back({Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)});
    cones.push_back({Vec(-1, 0, 0), Vec(0, -1, 0), Vec(0, 0, -1)});
    int slot = 0;
    for (const auto& [eps, g] : orthant_transports()) {
        DatumD dg = act_datum(g, d);
        auto id = datum_to_orthant_id(dg);
        if (!id) throw structure_error("assemble_with_fragments: bad datum");
        const auto& options = cand.at({id->m, id->m == 10 ? id->h10 : 0});
        const FragmentCones& frag = options[static_cast<std::size_t>(choice[static_cast<std::size_t>(slot)])];
        GroupElement ginv = g.inverse();
        for (const auto& cr : frag) {
            std::vector<Vec> mapped;
            for (const Vec& v : cr) {
                Vec w = id->mirrored ? Vec(v[2], v[1], v[0]) : v;
                mapped.push_back(act_vector(ginv, w));
            }
            cones.push_back(std::move(mapped));
        }
        ++slot;
    }
    return Fan::from_ray_cones(3, cones);
}

}  // namespace

std::vector<FragmentCones> filter_realizable_fragments(const MutationDatum& d12,
                                                       const MutationDatum& d32,
                                                       const std::vector<FragmentCones>& stage1) {
    int target_m = -1;
    for (int m = 0; m <= 13; ++m) {
        auto [a, b] = dm_datum(m);
        if (a == d12 && b == d32) target_m = m;
    }
    if (target_m < 0) throw std::domain_error("filter_realizable_fragments: not a d(m) value");

    // Stage-1 candidate lists per datum value; the target value is pinned
    // to the supplied list so individual fragments can be traced.
    std::map<std::pair<int, int>, std::vector<FragmentCones>> cand;
    cand[{target_m, 0}] = stage1;
    if (target_m == 10) cand[{10, 1}] = stage1;
    auto ensure = [&](int m, int h10) {
        auto k = std::make_pair(m, m == 10 ? h10 : 0);
        if (cand.count(k)) return;
        auto [a, b] = dm_datum(m);
        auto found = search_orthant_fragments(a, b);
        if (m == 10) {
            if (!cand.count({10, 0})) cand[{10, 0}] = found;
            if (!cand.count({10, 1})) cand[{10, 1}] = found;
        } else {
            cand[k] = found;
        }
    };

    std::set<std::size_t> surviving;
    for (const DatumD& d : data_with_value(d12, d32)) {
        std::vector<std::size_t> sizes;
        int pmp_slot = -1;
        int slot = 0;
        for (const auto& [eps, g] : orthant_transports()) {
            DatumD dg = act_datum(g, d);
            auto id = datum_to_orthant_id(dg);
            ensure(id->m, id->h10);
            sizes.push_back(cand.at({id->m, id->m == 10 ? id->h10 : 0}).size());
            if (eps == SignVector(1, -1, 1)) pmp_slot = slot;
            ++slot;
        }
        std::vector<int> choice(6, 0);
        auto run = [&](auto&& self, int s) -> void {
            if (s == 6) {
                Fan f;
                try {
                    f = assemble_with_fragments(d, cand, choice);
                } catch (const std::exception&) {
                    return;
                }
                if (!validate(f).all()) return;
                if (!is_convex(f).convex) return;
                if (!all_ray_templates_ok(f)) return;
                surviving.insert(static_cast<std::size_t>(choice[static_cast<std::size_t>(pmp_slot)]));
                return;
            }
            for (std::size_t c = 0; c < sizes[static_cast<std::size_t>(s)]; ++c) {
                choice[static_cast<std::size_t>(s)] = static_cast<int>(c);
                self(self, s + 1);
            }
        };
        run(run, 0);
    }

    std::vector<FragmentCones> out;
    for (std::size_t i = 0; i < stage1.size(); ++i)
        if (surviving.count(i)) out.push_back(stage1[i]);
    return out;
}

std::vector<FragmentCones> rederive_orthant_fans(int m) {
    auto [d12, d32] = dm_datum(m);
    auto stage1 = search_orthant_fragments(d12, d32);
    if (stage1.size() <= 1) return stage1;
    return filter_realizable_fragments(d12, d32, stage1);
}

}  // namespace gfan
