#include "gfan/fan.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace gfan {

Cone::Cone(std::vector<int> ids) : ray_ids(std::move(ids)) {
    std::sort(ray_ids.begin(), ray_ids.end());
    for (std::size_t i = 1; i < ray_ids.size(); ++i)
        if (ray_ids[i] == ray_ids[i - 1])
            throw structure_error("cone with repeated ray id");
}

bool Cone::contains_id(int id) const {
    return std::binary_search(ray_ids.begin(), ray_ids.end(), id);
}

Int ExchangeStep::label_sum() const {
    Int s = 0;
    for (Int a : labels) s = checked_add(s, a);
    return s;
}

bool ExchangeStep::ordering_ok() const {
    for (Int a : labels)
        if (a < 0) return false;
    return true;
}

Fan::Fan(int rank, std::vector<Vec> rays, std::vector<std::vector<int>> max_cones) : rank_(rank) {
    for (const Vec& r : rays) {
        if (r.rank != rank) throw dimension_error("fan: ray rank mismatch");
        if (r.is_zero() || r != make_primitive(r))
            throw std::domain_error("fan: ray not primitive: " + to_string(r));
    }
    std::set<Vec> seen(rays.begin(), rays.end());
    if (seen.size() != rays.size()) throw std::domain_error("fan: duplicate rays");

    // Normalize: sort rays lexicographically, remap cone ids.
    std::vector<Vec> sorted(seen.begin(), seen.end());
    std::map<Vec, int> idx;
    for (std::size_t i = 0; i < sorted.size(); ++i) idx[sorted[i]] = static_cast<int>(i);
    rays_ = std::move(sorted);

    std::set<Cone> cone_set;
    for (const auto& ids : max_cones) {
        std::vector<int> remapped;
        for (int id : ids) {
            if (id < 0 || id >= static_cast<int>(rays.size()))
                throw structure_error("fan: dangling ray index");
            remapped.push_back(idx.at(rays[static_cast<std::size_t>(id)]));
        }
        Cone c(std::move(remapped));
        if (c.dim() != rank_) throw structure_error("fan: maximal cone of wrong dimension");
        if (!cone_set.insert(c).second) throw std::domain_error("fan: duplicate maximal cone");
    }
    cones_.assign(cone_set.begin(), cone_set.end());

    // Every ray must appear in at least one maximal cone.
    std::vector<bool> used(rays_.size(), false);
    for (const Cone& c : cones_)
        for (int id : c.ray_ids) used[static_cast<std::size_t>(id)] = true;
    for (bool u : used)
        if (!u) throw structure_error("fan: ray not used by any maximal cone");
}

Fan Fan::from_ray_cones(int rank, const std::vector<std::vector<Vec>>& cones) {
    std::set<Vec> ray_set;
    for (const auto& c : cones)
        for (const Vec& v : c) ray_set.insert(v);
    std::vector<Vec> rays(ray_set.begin(), ray_set.end());
    std::map<Vec, int> idx;
    for (std::size_t i = 0; i < rays.size(); ++i) idx[rays[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> id_cones;
    for (const auto& c : cones) {
        std::vector<int> ids;
        for (const Vec& v : c) ids.push_back(idx.at(v));
        id_cones.push_back(std::move(ids));
    }
    return Fan(rank, std::move(rays), std::move(id_cones));
}

std::vector<Vec> Fan::cone_rays(const Cone& c) const {
    std::vector<Vec> out;
    for (int id : c.ray_ids) out.push_back(ray(id));
    return out;
}

std::optional<int> Fan::ray_id(const Vec& v) const {
    auto it = std::lower_bound(rays_.begin(), rays_.end(), v);
    if (it != rays_.end() && *it == v) return static_cast<int>(it - rays_.begin());
    return std::nullopt;
}

std::optional<SignVector> common_orthant(const std::vector<Vec>& rays) {
    if (rays.empty()) return std::nullopt;
    SignVector eps;
    eps.rank = rays.front().rank;
    for (int k = 0; k < eps.rank; ++k) {
        bool pos = false, neg = false;
        for (const Vec& r : rays) {
            if (r[k] > 0) pos = true;
            if (r[k] < 0) neg = true;
        }
        if (pos && neg) return std::nullopt;
        eps.s[static_cast<std::size_t>(k)] = neg ? -1 : 1;
    }
    return eps;
}

bool cone_in_orthant(const std::vector<Vec>& rays, const SignVector& eps) {
    for (const Vec& r : rays)
        for (int k = 0; k < r.rank; ++k)
            if (checked_mul(static_cast<Int>(eps[k]), r[k]) < 0) return false;
    return true;
}

bool point_in_cone(const Vec& p, const std::vector<Vec>& rays) {
    if (rays.size() == 2 && p.rank == 2) {
        Int d = det2(rays[0], rays[1]);
        Int a = det2(p, rays[1]);
        Int b = det2(rays[0], p);
        if (d < 0) { a = -a; b = -b; }
        return a >= 0 && b >= 0;
    }
    if (rays.size() == 3 && p.rank == 3) {
        Int d = det3(rays[0], rays[1], rays[2]);
        Int a = det3(p, rays[1], rays[2]);
        Int b = det3(rays[0], p, rays[2]);
        Int c = det3(rays[0], rays[1], p);
        if (d < 0) { a = -a; b = -b; c = -c; }
        return a >= 0 && b >= 0 && c >= 0;
    }
    throw dimension_error("point_in_cone: need a full-rank simplicial cone");
}

namespace {

Int cone_det(const Fan& f, const Cone& c) {
    auto rs = f.cone_rays(c);
    if (f.rank() == 2) return det2(rs[0], rs[1]);
    return det3(rs[0], rs[1], rs[2]);
}

// facet -> incident maximal cones
std::map<std::vector<int>, std::vector<int>> facet_incidence(const Fan& f) {
    std::map<std::vector<int>, std::vector<int>> inc;
    const auto& cones = f.max_cones();
    for (std::size_t ci = 0; ci < cones.size(); ++ci) {
        const auto& ids = cones[ci].ray_ids;
        for (std::size_t drop = 0; drop < ids.size(); ++drop) {
            std::vector<int> facet;
            for (std::size_t k = 0; k < ids.size(); ++k)
                if (k != drop) facet.push_back(ids[k]);
            inc[facet].push_back(static_cast<int>(ci));
        }
    }
    return inc;
}

// LCG over deterministic integer directions for the membership probe.
struct DirectionGen {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    Int next_small() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<Int>((state >> 33) % 19) - 9;
    }
    Vec next(int rank) {
        while (true) {
            Vec v;
            v.rank = rank;
            for (int k = 0; k < rank; ++k) v[k] = next_small();
            if (!v.is_zero()) return v;
        }
    }
};

}  // namespace

ValidityReport validate(const Fan& f) {
    ValidityReport rep;
    const auto& cones = f.max_cones();
    if (cones.empty()) return rep;

    rep.simplicial = true;
    rep.nonsingular = true;
    rep.sign_coherent = true;
    for (const Cone& c : cones) {
        Int d = cone_det(f, c);
        if (d == 0) rep.simplicial = false;
        if (d != 1 && d != -1) rep.nonsingular = false;
        if (!common_orthant(f.cone_rays(c))) rep.sign_coherent = false;
    }

    // Pairwise interior disjointness, exact. A coordinate half-space that
    // strictly contains one open cone and excludes the other separates the
    // pair without running the elimination.
    rep.fan_property = true;
    for (std::size_t i = 0; i + 1 < cones.size() && rep.fan_property; ++i) {
        auto ri = f.cone_rays(cones[i]);
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            auto rj = f.cone_rays(cones[j]);
            bool separated = false;
            for (int k = 0; k < f.rank() && !separated; ++k) {
                bool ip = false, in = false, jp = false, jn = false;
                for (const Vec& r : ri) { ip |= r[k] > 0; in |= r[k] < 0; }
                for (const Vec& r : rj) { jp |= r[k] > 0; jn |= r[k] < 0; }
                if ((ip && !in && !jp) || (jp && !jn && !ip) ||
                    (in && !ip && !jn) || (jn && !jp && !in))
                    separated = true;
            }
            if (separated) continue;
            if (cones_interiors_intersect(ri, rj)) {
                rep.fan_property = false;
                break;
            }
        }
    }

    // Completeness: facet pairing + connected facet graph + Euler count,
    // then a deterministic membership probe.
    rep.complete = true;
    auto inc = facet_incidence(f);
    for (const auto& [facet, owners] : inc)
        if (owners.size() != 2) rep.complete = false;
    if (rep.complete) {
        std::vector<std::vector<int>> adj(cones.size());
        for (const auto& [facet, owners] : inc) {
            adj[static_cast<std::size_t>(owners[0])].push_back(owners[1]);
            adj[static_cast<std::size_t>(owners[1])].push_back(owners[0]);
        }
        std::vector<bool> vis(cones.size(), false);
        std::queue<int> q;
        q.push(0);
        vis[0] = true;
        std::size_t count = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[static_cast<std::size_t>(u)])
                if (!vis[static_cast<std::size_t>(v)]) {
                    vis[static_cast<std::size_t>(v)] = true;
                    ++count;
                    q.push(v);
                }
        }
        if (count != cones.size()) rep.complete = false;

        const Int V = static_cast<Int>(f.rays().size());
        const Int E = static_cast<Int>(inc.size());
        const Int F = static_cast<Int>(cones.size());
        if (f.rank() == 3) {
            if (V - E + F != 2) rep.complete = false;
        } else {
            if (V != E) rep.complete = false;
        }
    }
    if (rep.complete && rep.simplicial) {
        DirectionGen gen;
        for (int probe = 0; probe < 1000; ++probe) {
            Vec p = gen.next(f.rank());
            bool covered = false;
            for (const Cone& c : cones)
                if (point_in_cone(p, f.cone_rays(c))) {
                    covered = true;
                    break;
                }
            if (!covered) {
                rep.complete = false;
                break;
            }
        }
    }
    return rep;
}

std::vector<FacetPair> adjacency_pairs(const Fan& f, bool require_complete) {
    auto inc = facet_incidence(f);
    for (const auto& [facet, owners] : inc) {
        if (owners.size() > 2)
            throw std::domain_error("adjacency_pairs: facet with more than two owners");
        if (require_complete && owners.size() != 2)
            throw std::domain_error("adjacency_pairs: fan is not complete");
    }
    std::vector<FacetPair> out;
    for (const auto& [facet, owners] : inc) {
        if (owners.size() != 2) continue;
        FacetPair p;
        p.facet = Cone(facet);
        p.left = f.max_cones()[static_cast<std::size_t>(owners[0])];
        p.right = f.max_cones()[static_cast<std::size_t>(owners[1])];
        out.push_back(std::move(p));
    }
    return out;
}

ExchangeStep exchange_relation(const Fan& f, const Cone& a, const Cone& b) {
    std::vector<int> shared;
    std::set_intersection(a.ray_ids.begin(), a.ray_ids.end(), b.ray_ids.begin(), b.ray_ids.end(),
                          std::back_inserter(shared));
    if (static_cast<int>(shared.size()) != f.rank() - 1 || a == b)
        throw std::domain_error("exchange_relation: cones are not adjacent");

    int xid = -1, yid = -1;
    for (int id : a.ray_ids)
        if (!std::binary_search(shared.begin(), shared.end(), id)) xid = id;
    for (int id : b.ray_ids)
        if (!std::binary_search(shared.begin(), shared.end(), id)) yid = id;

    ExchangeStep step;
    step.source_cone = a;
    step.target_cone = b;
    step.exchanged_out = f.ray(xid);
    step.exchanged_in = f.ray(yid);
    for (int id : shared) step.shared.push_back(f.ray(id));

    const Vec s = step.exchanged_out + step.exchanged_in;
    if (f.rank() == 2) {
        const Vec& t = step.shared[0];
        // s must be an integer multiple of t.
        if (det2(s, t) != 0)
            throw structure_error("exchange_relation: X+Y not on the shared ray");
        Int coeff = (t[0] != 0) ? s[0] / t[0] : s[1] / t[1];
        step.labels = {coeff};
    } else {
        const Vec& t1 = step.shared[0];
        const Vec& t2 = step.shared[1];
        const Vec& x = step.exchanged_out;
        Int d = det3(x, t1, t2);
        if (d == 0) throw structure_error("exchange_relation: degenerate cone");
        Int c0 = det3(s, t1, t2);
        Int c1 = det3(x, s, t2);
        Int c2 = det3(x, t1, s);
        if (c0 % d != 0 || c1 % d != 0 || c2 % d != 0 || c0 / d != 0)
            throw structure_error("exchange_relation: X+Y not in the span of shared rays");
        step.labels = {c1 / d, c2 / d};
    }
    return step;
}

bool hasse_arrow_direction(const Fan& f, const Cone& a, const Cone& b) {
    std::vector<int> shared;
    std::set_intersection(a.ray_ids.begin(), a.ray_ids.end(), b.ray_ids.begin(), b.ray_ids.end(),
                          std::back_inserter(shared));
    if (static_cast<int>(shared.size()) != f.rank() - 1)
        throw std::domain_error("hasse_arrow_direction: cones are not adjacent");

    Vec n;
    if (f.rank() == 2) {
        const Vec& t = f.ray(shared[0]);
        n = Vec(-t[1], t[0]);
    } else {
        const Vec& t1 = f.ray(shared[0]);
        const Vec& t2 = f.ray(shared[1]);
        n = Vec(checked_sub(checked_mul(t1[1], t2[2]), checked_mul(t1[2], t2[1])),
                checked_sub(checked_mul(t1[2], t2[0]), checked_mul(t1[0], t2[2])),
                checked_sub(checked_mul(t1[0], t2[1]), checked_mul(t1[1], t2[0])));
    }
    Int side_pos = 0;
    for (int k = 0; k < f.rank(); ++k) side_pos = checked_add(side_pos, n[k]);
    if (side_pos == 0)
        throw structure_error("hasse_arrow_direction: wall cannot be oriented against the positive cone");
    if (side_pos < 0) n = -n;

    int xa = -1;
    for (int id : a.ray_ids)
        if (!std::binary_search(shared.begin(), shared.end(), id)) xa = id;
    Int side_a = dot(f.ray(xa), n);
    if (side_a == 0) throw structure_error("hasse_arrow_direction: degenerate cone");
    return side_a > 0;
}

std::vector<int> HasseDigraph::out_of(int node) const {
    std::vector<int> r;
    for (const auto& [s, t] : arrows)
        if (s == node) r.push_back(t);
    return r;
}
std::vector<int> HasseDigraph::in_of(int node) const {
    std::vector<int> r;
    for (const auto& [s, t] : arrows)
        if (t == node) r.push_back(s);
    return r;
}
bool HasseDigraph::acyclic() const {
    std::vector<int> indeg(nodes.size(), 0);
    for (const auto& [s, t] : arrows) indeg[static_cast<std::size_t>(t)]++;
    std::queue<int> q;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (indeg[i] == 0) q.push(static_cast<int>(i));
    std::size_t seen = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        ++seen;
        for (int v : out_of(u))
            if (--indeg[static_cast<std::size_t>(v)] == 0) q.push(v);
    }
    return seen == nodes.size();
}
std::vector<int> HasseDigraph::sources() const {
    std::vector<int> r;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (in_of(static_cast<int>(i)).empty()) r.push_back(static_cast<int>(i));
    return r;
}
std::vector<int> HasseDigraph::sinks() const {
    std::vector<int> r;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (out_of(static_cast<int>(i)).empty()) r.push_back(static_cast<int>(i));
    return r;
}
int HasseDigraph::index_of(const Cone& c) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == c) return static_cast<int>(i);
    return -1;
}

HasseDigraph hasse_orientation(const Fan& f) {
    // Requires the positive cone.
    std::vector<Vec> pos_rays;
    for (int k = 0; k < f.rank(); ++k) {
        Vec e;
        e.rank = f.rank();
        e[k] = 1;
        pos_rays.push_back(e);
    }
    std::sort(pos_rays.begin(), pos_rays.end());
    bool has_pos = false;
    for (const Cone& c : f.max_cones())
        if (f.cone_rays(c) == pos_rays) has_pos = true;
    if (!has_pos) throw std::domain_error("hasse_orientation: positive cone absent");

    HasseDigraph g;
    g.nodes = f.max_cones();
    for (const FacetPair& p : adjacency_pairs(f)) {
        int li = g.index_of(p.left);
        int ri = g.index_of(p.right);
        if (hasse_arrow_direction(f, p.left, p.right))
            g.arrows.emplace_back(li, ri);
        else
            g.arrows.emplace_back(ri, li);
    }
    std::sort(g.arrows.begin(), g.arrows.end());
    return g;
}

std::vector<Cone> orthant_restriction(const Fan& f, const SignVector& eps) {
    std::vector<Cone> out;
    for (const Cone& c : f.max_cones())
        if (cone_in_orthant(f.cone_rays(c), eps)) out.push_back(c);
    return out;
}

}  // namespace gfan
