#pragma once

#include "gfan/exactlin.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace gfan {

// Sign vector of an orthant, entries +1 / -1.
struct SignVector {
    std::array<int, 3> s{1, 1, 1};
    int rank = 3;

    SignVector() = default;
    SignVector(int a, int b) : s{a, b, 1}, rank(2) {}
    SignVector(int a, int b, int c) : s{a, b, c}, rank(3) {}

    int operator[](int i) const { return s[static_cast<std::size_t>(i)]; }
    friend bool operator==(const SignVector& a, const SignVector& b) { return a.rank == b.rank && a.s == b.s; }
    friend bool operator<(const SignVector& a, const SignVector& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.s < b.s;
    }
};

// Maximal cone as sorted ray ids into the owning fan's ray table.
struct Cone {
    std::vector<int> ray_ids;

    Cone() = default;
    explicit Cone(std::vector<int> ids);

    int dim() const { return static_cast<int>(ray_ids.size()); }
    bool contains_id(int id) const;

    friend bool operator==(const Cone& a, const Cone& b) { return a.ray_ids == b.ray_ids; }
    friend bool operator<(const Cone& a, const Cone& b) { return a.ray_ids < b.ray_ids; }
};

struct ValidityReport {
    bool simplicial = false;
    bool nonsingular = false;
    bool sign_coherent = false;
    bool fan_property = false;
    bool complete = false;

    bool all() const { return simplicial && nonsingular && sign_coherent && fan_property && complete; }
};

struct ExchangeStep {
    Cone source_cone;
    Cone target_cone;
    Vec exchanged_out;           // X, the ray leaving
    Vec exchanged_in;            // Y, the ray entering
    std::vector<Vec> shared;     // T_1, ..., T_{d-1}
    std::vector<Int> labels;     // a_i with g(X)+g(Y) = sum a_i g(T_i)

    Int label_sum() const;
    bool ordering_ok() const;    // all labels nonnegative (g-fan property)
};

// Simplicial fan: primitive deduplicated ray table plus maximal cones of
// full dimension. Rays are stored sorted lexicographically and cones as
// sorted id tuples, so equal fans compare equal structurally.
class Fan {
  public:
    Fan() = default;
    Fan(int rank, std::vector<Vec> rays, std::vector<std::vector<int>> max_cones);

    // Build from explicit cones given by their ray vectors.
    static Fan from_ray_cones(int rank, const std::vector<std::vector<Vec>>& cones);

    int rank() const { return rank_; }
    const std::vector<Vec>& rays() const { return rays_; }
    const std::vector<Cone>& max_cones() const { return cones_; }

    const Vec& ray(int id) const { return rays_[static_cast<std::size_t>(id)]; }
    std::vector<Vec> cone_rays(const Cone& c) const;
    std::optional<int> ray_id(const Vec& v) const;

    friend bool operator==(const Fan& a, const Fan& b) {
        return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.cones_ == b.cones_;
    }
    friend bool operator<(const Fan& a, const Fan& b) {
        if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
        if (a.rays_ != b.rays_) return a.rays_ < b.rays_;
        return a.cones_ < b.cones_;
    }

  private:
    int rank_ = 3;
    std::vector<Vec> rays_;
    std::vector<Cone> cones_;
};

ValidityReport validate(const Fan& f);

// Internal codim-1 face incidences of a complete fan, one entry per facet.
struct FacetPair {
    Cone facet;   // the shared codim-1 face (ray ids)
    Cone left;    // the two maximal cones it separates
    Cone right;
};
std::vector<FacetPair> adjacency_pairs(const Fan& f, bool require_complete = true);

// Exchange relation across the shared facet of two adjacent maximal cones.
// Throws std::domain_error if the cones are not adjacent and
// structure_error if X+Y does not lie in the span of the shared rays.
// Negative labels are returned as-is; callers that require the g-fan
// ordering property must check ordering_ok().
ExchangeStep exchange_relation(const Fan& f, const Cone& a, const Cone& b);

// Hasse orientation of the adjacency graph: arrow a -> b when a lies on the
// same side of the shared facet's hyperplane as the positive cone.
struct HasseDigraph {
    std::vector<Cone> nodes;
    std::vector<std::pair<int, int>> arrows;  // indices into nodes

    std::vector<int> out_of(int node) const;
    std::vector<int> in_of(int node) const;
    bool acyclic() const;
    std::vector<int> sources() const;
    std::vector<int> sinks() const;
    int index_of(const Cone& c) const;
};
HasseDigraph hasse_orientation(const Fan& f);

// True if a -> b under the hyperplane rule; throws structure_error when the
// wall cannot be oriented against the positive cone.
bool hasse_arrow_direction(const Fan& f, const Cone& a, const Cone& b);

// Maximal cones of f contained in the closed orthant eps.
std::vector<Cone> orthant_restriction(const Fan& f, const SignVector& eps);

bool cone_in_orthant(const std::vector<Vec>& rays, const SignVector& eps);
std::optional<SignVector> common_orthant(const std::vector<Vec>& rays);

// Exact membership: does p lie in cone(rays)? rays must be simplicial of
// full rank.
bool point_in_cone(const Vec& p, const std::vector<Vec>& rays);

}  // namespace gfan
