#pragma once

#include "gfan/classify.hpp"

#include <vector>

namespace gfan {

// A candidate fragment for the (+,-,+) orthant: maximal cones as ray sets.
using FragmentCones = std::vector<std::vector<Vec>>;

// Stage 1: all tilings of the orthant (+,-,+) by unimodular sign-coherent
// cones such that
//   - the wall rays on x3 = 0 and x1 = 0 are exactly the quadrant tables of
//     (d12, d32),
//   - sigma_min and sigma_max are cones,
//   - every ray lies in the half-space region of the min/max normals,
//   - every internal wall has label sum <= 2, and label 2 only with 0,
//   - consecutive arrows around a common ray carry an allowed over-label
//     pair ((0,0), (1,1), (1,2) or (2,1)).
// Deterministic output order.
std::vector<FragmentCones> search_orthant_fragments(const MutationDatum& d12,
                                                    const MutationDatum& d32);

// Stage 2: keep only fragments that embed into a complete convex host:
// some admissible datum with this (+,-,+) value, together with a choice of
// stage-1 fragments for the other five orthants, assembles into a valid
// convex fan all of whose ray stars match the path templates. Mirrored or
// transported occurrences reuse the same candidate lists.
std::vector<FragmentCones> filter_realizable_fragments(const MutationDatum& d12,
                                                       const MutationDatum& d32,
                                                       const std::vector<FragmentCones>& stage1);

// Both stages for the datum d(m); the result is expected to match the
// catalog fragment(s) exactly (two for m = 10).
std::vector<FragmentCones> rederive_orthant_fans(int m);

}  // namespace gfan
