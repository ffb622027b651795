#pragma once

#include "gfan/fan.hpp"

#include <string>
#include <vector>

namespace gfan {

// Signed coordinate permutation z * f_s. perm[i] = s(i+1)-1, so the action
// sends e_i to sign * e_{perm[i]}.
struct GroupElement {
    std::array<int, 3> perm{0, 1, 2};
    int sign = 1;
    int rank = 3;

    static GroupElement identity(int rank);

    GroupElement inverse() const;
    // (a * b) acts as: first b, then a.
    friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.rank == b.rank && a.perm == b.perm && a.sign == b.sign;
    }
};

// All 2 * rank! signed permutations, deterministic order.
std::vector<GroupElement> full_group(int rank);

Vec act_vector(const GroupElement& g, const Vec& v);
SignVector act_sign(const GroupElement& g, const SignVector& eps);
Fan act_fan(const GroupElement& g, const Fan& f);

// Canonical byte string: minimum over all group elements of the serialized
// fan (rays sorted lexicographically, cones as sorted id tuples). Equal
// strings <=> isomorphic as sign-coherent fans.
std::string serialize_fan(const Fan& f);
std::string canonical_form(const Fan& f);

}  // namespace gfan
