#include "gfan/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gfan {

std::vector<Vec> simplex_conv0(const Fan& f, const Cone& c) {
    std::vector<Vec> out;
    Vec zero;
    zero.rank = f.rank();
    out.push_back(zero);
    for (const Vec& r : f.cone_rays(c)) out.push_back(r);
    return out;
}

ConvexityResult is_convex(const Fan& f) {
    ConvexityResult res;
    res.convex = true;
    res.ordering_ok = true;
    for (const FacetPair& p : adjacency_pairs(f)) {
        ExchangeStep step = exchange_relation(f, p.left, p.right);
        bool bad_sum = step.label_sum() > 2;
        bool bad_sign = !step.ordering_ok();
        if (bad_sum) res.convex = false;
        if (bad_sign) res.ordering_ok = false;
        if ((bad_sum || bad_sign) && !res.witness) res.witness = step;
    }
    return res;
}

std::vector<HalfSpace> half_space_set(const Fan& f) {
    std::set<Vec> normals;
    for (const Cone& c : f.max_cones()) {
        Mat m(f.cone_rays(c));
        m.rank = f.rank();
        normals.insert(solve_normal(m));
    }
    std::vector<HalfSpace> out;
    for (const Vec& n : normals) out.push_back(HalfSpace{n});
    return out;
}

GPolytope g_polytope(const Fan& f) {
    GPolytope p;
    p.vertex_candidates = f.rays();
    p.half_spaces = half_space_set(f);
    return p;
}

bool hull_inequalities_hold(const Fan& f) {
    auto hs = half_space_set(f);
    for (const HalfSpace& h : hs)
        for (const Vec& r : f.rays())
            if (dot(r, h.normal) > 1) return false;
    return true;
}

namespace {

// Upper bound of eps_k * x_k over {<x,n_j> <= bound, eps-orthant} by
// Fourier-Motzkin projection onto coordinate k. Returns nothing when
// unbounded. Rows are kept as <a, x> <= c.
struct LeRow {
    std::array<Int, 3> a{0, 0, 0};
    Int c = 0;
};

std::optional<Int> directional_bound(const std::vector<HalfSpace>& hs, const SignVector& eps, int k,
                                     Int bound) {
    const int rank = eps.rank;
    std::vector<LeRow> rows;
    for (const HalfSpace& h : hs) {
        LeRow r;
        for (int i = 0; i < rank; ++i) r.a[static_cast<std::size_t>(i)] = h.normal[i];
        r.c = bound;
        rows.push_back(r);
    }
    for (int i = 0; i < rank; ++i) {
        LeRow r;
        r.a[static_cast<std::size_t>(i)] = -eps[i];
        r.c = 0;
        rows.push_back(r);
    }
    for (int v = 0; v < rank; ++v) {
        if (v == k) continue;
        std::vector<LeRow> pos, neg, keep;
        for (const auto& r : rows) {
            if (r.a[static_cast<std::size_t>(v)] > 0) pos.push_back(r);
            else if (r.a[static_cast<std::size_t>(v)] < 0) neg.push_back(r);
            else keep.push_back(r);
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                Int ap = p.a[static_cast<std::size_t>(v)];
                Int an = -n.a[static_cast<std::size_t>(v)];
                LeRow comb;
                for (int i = 0; i < rank; ++i)
                    comb.a[static_cast<std::size_t>(i)] =
                        checked_add(checked_mul(an, p.a[static_cast<std::size_t>(i)]),
                                    checked_mul(ap, n.a[static_cast<std::size_t>(i)]));
                comb.c = checked_add(checked_mul(an, p.c), checked_mul(ap, n.c));
                comb.a[static_cast<std::size_t>(v)] = 0;
                keep.push_back(comb);
            }
        rows = std::move(keep);
    }
    // Largest value of eps_k*x_k: rows are a_k x_k <= c. In direction
    // eps_k we need a row with eps_k * a_k > 0.
    std::optional<Int> best;
    for (const auto& r : rows) {
        Int ak = r.a[static_cast<std::size_t>(k)];
        if (checked_mul(static_cast<Int>(eps[k]), ak) <= 0) continue;
        // eps_k x_k <= c / |a_k| -> integral bound floor(c/|ak|)
        Int aabs = ak < 0 ? -ak : ak;
        Int b = r.c >= 0 ? r.c / aabs : -((-r.c + aabs - 1) / aabs);
        if (!best || b < *best) best = b;
    }
    return best;
}

bool satisfies(const std::vector<HalfSpace>& hs, const Vec& x, Int bound, bool strict) {
    for (const HalfSpace& h : hs) {
        Int v = dot(x, h.normal);
        if (strict ? v >= bound : v > bound) return false;
    }
    return true;
}

std::vector<Vec> lattice_points_impl(const std::vector<HalfSpace>& hs, const SignVector& eps,
                                     Int bound) {
    const int rank = eps.rank;
    std::array<Int, 3> box{0, 0, 0};
    for (int k = 0; k < rank; ++k) {
        auto b = directional_bound(hs, eps, k, bound);
        if (!b) throw std::domain_error("lattice_points_in_orthant: region unbounded in coordinate " +
                                        std::to_string(k + 1));
        box[static_cast<std::size_t>(k)] = std::max<Int>(*b, 0);
    }
    std::vector<Vec> out;
    auto scan = [&](auto&& self, int k, Vec& x) -> void {
        if (k == rank) {
            if (!x.is_zero() && satisfies(hs, x, bound, false)) out.push_back(x);
            return;
        }
        for (Int t = 0; t <= box[static_cast<std::size_t>(k)]; ++t) {
            x[k] = checked_mul(static_cast<Int>(eps[k]), t);
            self(self, k + 1, x);
        }
        x[k] = 0;
    };
    Vec x;
    x.rank = rank;
    scan(scan, 0, x);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Vec> lattice_points_in_orthant(const std::vector<HalfSpace>& hs, const SignVector& eps) {
    return lattice_points_impl(hs, eps, 1);
}

std::vector<Vec> lattice_points_in_orthant(const std::vector<HalfSpace>& hs, const SignVector& eps,
                                           Int bound) {
    return lattice_points_impl(hs, eps, bound);
}

std::vector<Vec> interior_lattice_points(const std::vector<HalfSpace>& hs, int rank, Int bound) {
    std::set<Vec> interior;
    std::vector<SignVector> orthants;
    if (rank == 2)
        orthants = {SignVector(1, 1), SignVector(1, -1), SignVector(-1, 1), SignVector(-1, -1)};
    else
        for (int a : {1, -1})
            for (int b : {1, -1})
                for (int c : {1, -1}) orthants.push_back(SignVector(a, b, c));
    for (const SignVector& eps : orthants)
        for (const Vec& x : lattice_points_impl(hs, eps, bound))
            if (satisfies(hs, x, bound, true)) interior.insert(x);
    return {interior.begin(), interior.end()};
}

bool condition_H(const std::vector<Vec>& normals, const SignVector& eps) {
    std::vector<Vec> pool = normals;
    for (int i = 0; i < eps.rank; ++i) {
        Vec e;
        e.rank = eps.rank;
        e[i] = -eps[i];
        pool.push_back(e);
    }
    const int n = static_cast<int>(pool.size());
    if (eps.rank == 3) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    Int d = det3(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)],
                                 pool[static_cast<std::size_t>(k)]);
                    if (d < -1 || d > 1) return false;
                }
        return true;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Int d = det2(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
            if (d < -1 || d > 1) return false;
        }
    return true;
}

namespace {

// Facet (primitive outward normal a, offset c > 0 with <x,a> <= c) of the
// convex hull of the given points, origin required strictly inside.
struct HullFacet {
    Vec normal;
    Int offset;
    friend bool operator<(const HullFacet& x, const HullFacet& y) {
        if (x.normal != y.normal) return x.normal < y.normal;
        return x.offset < y.offset;
    }
};

std::vector<HullFacet> hull_facets(const std::vector<Vec>& pts) {
    if (pts.empty()) throw std::domain_error("hull_facets: no points");
    const int rank = pts.front().rank;
    std::set<HullFacet> facets;
    const int n = static_cast<int>(pts.size());
    auto try_insert = [&](Vec nn, const Vec& witness) {
        if (nn.is_zero()) return;
        Vec a0 = make_primitive(nn);
        for (const Vec& a : {a0, -a0}) {
            Int c = dot(a, witness);
            bool support = true;
            for (const Vec& s : pts)
                if (dot(s, a) > c) { support = false; break; }
            if (!support) continue;
            if (c <= 0) throw std::domain_error("hull_facets: origin not interior");
            facets.insert(HullFacet{a, c});
        }
    };
    if (rank == 2) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Vec& p = pts[static_cast<std::size_t>(i)];
                const Vec& q = pts[static_cast<std::size_t>(j)];
                try_insert(Vec(q[1] - p[1], p[0] - q[0]), p);
            }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    const Vec& p = pts[static_cast<std::size_t>(i)];
                    const Vec& q = pts[static_cast<std::size_t>(j)];
                    const Vec& r = pts[static_cast<std::size_t>(k)];
                    Vec u = q - p, v = r - p;
                    try_insert(Vec(checked_sub(checked_mul(u[1], v[2]), checked_mul(u[2], v[1])),
                                   checked_sub(checked_mul(u[2], v[0]), checked_mul(u[0], v[2])),
                                   checked_sub(checked_mul(u[0], v[1]), checked_mul(u[1], v[0]))),
                               p);
                }
    }
    return {facets.begin(), facets.end()};
}

}  // namespace

bool is_reflexive(const GPolytope& p) {
    auto facets = hull_facets(p.vertex_candidates);
    for (const HullFacet& f : facets)
        if (f.offset != 1) return false;
    return true;
}

bool unique_interior_lattice_point(const GPolytope& p) {
    const int rank = p.vertex_candidates.empty() ? 3 : p.vertex_candidates.front().rank;
    // 0 is always strictly interior at bound 1; unique iff no other point is.
    return interior_lattice_points(p.half_spaces, rank, 1).empty();
}

}  // namespace gfan
