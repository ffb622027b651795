#pragma once

#include "gfan/fan.hpp"

#include <optional>
#include <vector>

namespace gfan {

// Half-space <x, normal> <= 1.
struct HalfSpace {
    Vec normal;
    friend bool operator==(const HalfSpace& a, const HalfSpace& b) { return a.normal == b.normal; }
    friend bool operator<(const HalfSpace& a, const HalfSpace& b) { return a.normal < b.normal; }
};

struct GPolytope {
    std::vector<Vec> vertex_candidates;  // the fan's rays
    std::vector<HalfSpace> half_spaces;  // one normal per maximal cone, deduplicated
};

struct ConvexityResult {
    bool convex = false;       // every wall's label sum <= 2
    bool ordering_ok = false;  // every wall's labels nonnegative
    std::optional<ExchangeStep> witness;  // a wall violating one of the two
};

// {0} union the cone's generators.
std::vector<Vec> simplex_conv0(const Fan& f, const Cone& c);

// The pairwise exchange criterion: convex iff sum of labels <= 2 at every
// wall. Nonnegativity of the labels is the separate g-fan ordering signal,
// reported but not folded into the convexity verdict.
ConvexityResult is_convex(const Fan& f);

// Roof normals v_tau of all maximal cones, deduplicated, sorted.
std::vector<HalfSpace> half_space_set(const Fan& f);

GPolytope g_polytope(const Fan& f);

// All nonzero lattice points of (intersection of half-spaces) within the
// closed orthant eps. The bounding box is derived from the inequalities;
// throws std::domain_error if some coordinate is unbounded in the orthant.
std::vector<Vec> lattice_points_in_orthant(const std::vector<HalfSpace>& hs, const SignVector& eps);
// Same with the common right-hand side scaled to `bound` (test hook for
// dilated regions).
std::vector<Vec> lattice_points_in_orthant(const std::vector<HalfSpace>& hs, const SignVector& eps,
                                           Int bound);

// Nonzero lattice points strictly inside every half-space (over all
// orthants), with right-hand side `bound`.
std::vector<Vec> interior_lattice_points(const std::vector<HalfSpace>& hs, int rank, Int bound);

// det in {0, +-1} for every rank-size subset of normals union {-eps_i e_i}.
bool condition_H(const std::vector<Vec>& normals, const SignVector& eps);

// Reflexivity of the g-polytope of a convex fan: integral roof normals at
// bound 1 reproduce the hull of the rays, i.e. every ray satisfies every
// inequality and the origin is strictly interior.
bool is_reflexive(const GPolytope& p);

// True iff 0 is the only lattice point strictly inside all half-spaces.
bool unique_interior_lattice_point(const GPolytope& p);

// Direct hull oracle: every ray satisfies <ray, v_tau> <= 1 for every
// maximal cone tau. Equivalent to convexity of the union of simplices.
bool hull_inequalities_hold(const Fan& f);

}  // namespace gfan
