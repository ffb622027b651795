#pragma once

#include "gfan/fan.hpp"

#include <string>
#include <vector>

namespace gfan {

// One arrow of a maximal chain around a ray: `over` is the coefficient on
// the remaining in-plane ray, `under` the coefficient on the reduced-away
// ray ("(., a)" over / "b" under).
struct PathArrow {
    Int over = 0;
    Int under = 0;
    friend bool operator==(const PathArrow& a, const PathArrow& b) {
        return a.over == b.over && a.under == b.under;
    }
};

struct LabeledPath {
    Vec first_exchanged;  // ray of the source cone exchanged by the first arrow
    std::vector<PathArrow> arrows;
};

// Quotient of the star of `ray` by its lattice line via the deterministic
// unimodular complement; returns a complete rank-2 fan.
Fan reduce_at_ray(const Fan& f, const Vec& ray);
// Same with an explicit complement basis (the reduced fan class must not
// depend on the choice).
Fan reduce_at_ray(const Fan& f, const Vec& ray, const Mat& complement);

// The two maximal chains of the star poset of `ray` (host Hasse order
// restricted to cones containing the ray). Throws structure_error when the
// star is not an interval with exactly two maximal chains.
std::pair<LabeledPath, LabeledPath> maximal_paths_at_ray(const Fan& f, const Vec& ray);

// Template forms of a maximal chain around a ray: lengths 2,3,4,4 with
// over-label sequences (0,0), (1,1,1), (2,1,2,1), (1,2,1,2) and the
// corresponding under-label ranges.
enum class PathTemplate { I, II, III, IV };
std::string to_string(PathTemplate t);

// Matches one chain against the four forms; returns nothing when the chain
// fits none of them.
std::optional<PathTemplate> match_chain(const LabeledPath& p);

// Template pair (p, q') for the two maximal chains; throws structure_error
// if either fails to match.
std::pair<PathTemplate, PathTemplate> match_template(const LabeledPath& p, const LabeledPath& q);

// True when every ray's star poset is an interval with exactly two maximal
// chains both matching a template. Fails on the non-realizable candidates.
bool all_ray_templates_ok(const Fan& f);

}  // namespace gfan
