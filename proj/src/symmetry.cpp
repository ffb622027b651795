#include "gfan/symmetry.hpp"

#include <algorithm>
#include <sstream>

namespace gfan {

GroupElement GroupElement::identity(int rank) {
    GroupElement g;
    g.rank = rank;
    return g;
}

GroupElement GroupElement::inverse() const {
    GroupElement g;
    g.rank = rank;
    g.sign = sign;
    for (int i = 0; i < rank; ++i) g.perm[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    return g;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    GroupElement g;
    g.rank = a.rank;
    g.sign = a.sign * b.sign;
    for (int i = 0; i < a.rank; ++i)
        g.perm[static_cast<std::size_t>(i)] =
            a.perm[static_cast<std::size_t>(b.perm[static_cast<std::size_t>(i)])];
    return g;
}

std::vector<GroupElement> full_group(int rank) {
    std::vector<GroupElement> out;
    std::array<int, 3> p{0, 1, 2};
    std::vector<std::array<int, 3>> perms;
    if (rank == 2) {
        perms = {{0, 1, 2}, {1, 0, 2}};
    } else {
        std::array<int, 3> q{0, 1, 2};
        do perms.push_back(q);
        while (std::next_permutation(q.begin(), q.end()));
    }
    for (const auto& pp : perms)
        for (int z : {1, -1}) {
            GroupElement g;
            g.rank = rank;
            g.perm = pp;
            g.sign = z;
            out.push_back(g);
        }
    (void)p;
    return out;
}

Vec act_vector(const GroupElement& g, const Vec& v) {
    if (g.rank != v.rank) throw dimension_error("act_vector: rank mismatch");
    Vec r;
    r.rank = v.rank;
    for (int i = 0; i < v.rank; ++i)
        r[g.perm[static_cast<std::size_t>(i)]] = checked_mul(static_cast<Int>(g.sign), v[i]);
    return r;
}

SignVector act_sign(const GroupElement& g, const SignVector& eps) {
    SignVector r;
    r.rank = eps.rank;
    for (int i = 0; i < eps.rank; ++i)
        r.s[static_cast<std::size_t>(g.perm[static_cast<std::size_t>(i)])] = g.sign * eps[i];
    return r;
}

Fan act_fan(const GroupElement& g, const Fan& f) {
    std::vector<std::vector<Vec>> cones;
    for (const Cone& c : f.max_cones()) {
        std::vector<Vec> rays;
        for (const Vec& r : f.cone_rays(c)) rays.push_back(act_vector(g, r));
        cones.push_back(std::move(rays));
    }
    return Fan::from_ray_cones(f.rank(), cones);
}

std::string serialize_fan(const Fan& f) {
    std::ostringstream os;
    os << f.rank() << ';';
    for (const Vec& r : f.rays()) {
        for (int k = 0; k < f.rank(); ++k) os << r[k] << (k + 1 < f.rank() ? ',' : ' ');
    }
    os << ';';
    for (const Cone& c : f.max_cones()) {
        for (std::size_t k = 0; k < c.ray_ids.size(); ++k)
            os << c.ray_ids[k] << (k + 1 < c.ray_ids.size() ? ',' : ' ');
        os << '|';
    }
    return os.str();
}

std::string canonical_form(const Fan& f) {
    std::string best;
    bool first = true;
    for (const GroupElement& g : full_group(f.rank())) {
        std::string s = serialize_fan(act_fan(g, f));
        if (first || s < best) {
            best = std::move(s);
            first = false;
        }
    }
    return best;
}

}  // namespace gfan
