#include "gfan/reduction.hpp"

#include <algorithm>
#include <map>

namespace gfan {

namespace {

// The star's maximal cone: unique source of the star under the Hasse rule.
Cone star_top_cone(const Fan& f, int ray_id) {
    std::vector<Cone> star;
    for (const Cone& c : f.max_cones())
        if (c.contains_id(ray_id)) star.push_back(c);
    std::vector<bool> has_in(star.size(), false);
    for (std::size_t i = 0; i < star.size(); ++i)
        for (std::size_t j = i + 1; j < star.size(); ++j) {
            std::vector<int> shared;
            std::set_intersection(star[i].ray_ids.begin(), star[i].ray_ids.end(),
                                  star[j].ray_ids.begin(), star[j].ray_ids.end(),
                                  std::back_inserter(shared));
            if (static_cast<int>(shared.size()) != f.rank() - 1) continue;
            if (!std::binary_search(shared.begin(), shared.end(), ray_id)) continue;
            if (hasse_arrow_direction(f, star[i], star[j]))
                has_in[j] = true;
            else
                has_in[i] = true;
        }
    int top = -1;
    for (std::size_t i = 0; i < star.size(); ++i)
        if (!has_in[i]) {
            if (top != -1) throw structure_error("reduce_at_ray: star has no unique top cone");
            top = static_cast<int>(i);
        }
    if (top == -1) throw structure_error("reduce_at_ray: star order is cyclic");
    return star[static_cast<std::size_t>(top)];
}

}  // namespace

Fan reduce_at_ray(const Fan& f, const Vec& ray) {
    auto id = f.ray_id(ray);
    if (!id) throw std::domain_error("reduce_at_ray: ray not in fan");
    // Project in the coordinates of the star's top cone: its two other rays
    // map to the standard basis of the quotient.
    Cone top = star_top_cone(f, *id);
    Mat basis;
    basis.rank = 3;
    for (int rid : top.ray_ids)
        if (rid != *id) basis.cols.push_back(f.ray(rid));
    return reduce_at_ray(f, ray, basis);
}

Fan reduce_at_ray(const Fan& f, const Vec& ray, const Mat& comp) {
    auto id = f.ray_id(ray);
    if (!id) throw std::domain_error("reduce_at_ray: ray not in fan");
    if (f.rank() != 3) throw dimension_error("reduce_at_ray: host must have rank 3");
    if (comp.cols.size() != 2) throw dimension_error("reduce_at_ray: need two complement columns");
    const Vec& c1 = comp.cols[0];
    const Vec& c2 = comp.cols[1];
    const Int d = det3(c1, c2, ray);
    if (d != 1 && d != -1) throw not_unimodular_error("reduce_at_ray: complement not unimodular");

    auto project = [&](const Vec& x) {
        // x = alpha c1 + beta c2 + gamma ray; image is (alpha, beta).
        Int a = det3(x, c2, ray);
        Int b = det3(c1, x, ray);
        if (a % d != 0 || b % d != 0) throw structure_error("reduce_at_ray: non-integral projection");
        Vec out(a / d, b / d);
        return make_primitive(out);
    };

    std::vector<std::vector<Vec>> cones;
    for (const Cone& c : f.max_cones()) {
        if (!c.contains_id(*id)) continue;
        std::vector<Vec> img;
        for (int rid : c.ray_ids)
            if (rid != *id) img.push_back(project(f.ray(rid)));
        if (img.size() != 2 || img[0] == img[1])
            throw structure_error("reduce_at_ray: degenerate star cone");
        cones.push_back(std::move(img));
    }
    return Fan::from_ray_cones(2, cones);
}

std::pair<LabeledPath, LabeledPath> maximal_paths_at_ray(const Fan& f, const Vec& ray) {
    auto id = f.ray_id(ray);
    if (!id) throw std::domain_error("maximal_paths_at_ray: ray not in fan");

    // Star cones and the Hasse arrows between them whose shared facet
    // contains the ray.
    std::vector<Cone> star;
    for (const Cone& c : f.max_cones())
        if (c.contains_id(*id)) star.push_back(c);

    struct Arrow {
        int src, dst;
        PathArrow lab;
    };
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < star.size(); ++i)
        for (std::size_t j = i + 1; j < star.size(); ++j) {
            std::vector<int> shared;
            std::set_intersection(star[i].ray_ids.begin(), star[i].ray_ids.end(),
                                  star[j].ray_ids.begin(), star[j].ray_ids.end(),
                                  std::back_inserter(shared));
            if (static_cast<int>(shared.size()) != f.rank() - 1) continue;
            if (!std::binary_search(shared.begin(), shared.end(), *id)) continue;
            ExchangeStep st = exchange_relation(f, star[i], star[j]);
            // Label on the reduced-away ray goes under, the other over.
            PathArrow lab;
            if (st.shared[0] == ray) { lab.under = st.labels[0]; lab.over = st.labels[1]; }
            else { lab.under = st.labels[1]; lab.over = st.labels[0]; }
            bool fwd = hasse_arrow_direction(f, star[i], star[j]);
            Arrow a;
            a.src = fwd ? static_cast<int>(i) : static_cast<int>(j);
            a.dst = fwd ? static_cast<int>(j) : static_cast<int>(i);
            a.lab = lab;
            arrows.push_back(a);
        }

    std::vector<std::vector<int>> outd(star.size()), ind(star.size());
    std::map<std::pair<int, int>, PathArrow> lab;
    for (const Arrow& a : arrows) {
        outd[static_cast<std::size_t>(a.src)].push_back(a.dst);
        ind[static_cast<std::size_t>(a.dst)].push_back(a.src);
        lab[{a.src, a.dst}] = a.lab;
    }
    int src = -1, snk = -1;
    for (std::size_t i = 0; i < star.size(); ++i) {
        if (ind[i].empty()) {
            if (src != -1) throw structure_error("maximal_paths_at_ray: star has two sources");
            src = static_cast<int>(i);
        }
        if (outd[i].empty()) {
            if (snk != -1) throw structure_error("maximal_paths_at_ray: star has two sinks");
            snk = static_cast<int>(i);
        }
    }
    if (src == -1 || snk == -1) throw structure_error("maximal_paths_at_ray: star order is cyclic");
    for (std::size_t i = 0; i < star.size(); ++i) {
        std::size_t need_out = (static_cast<int>(i) == src) ? 2 : (static_cast<int>(i) == snk ? 0 : 1);
        std::size_t need_in = (static_cast<int>(i) == snk) ? 2 : (static_cast<int>(i) == src ? 0 : 1);
        if (outd[i].size() != need_out || ind[i].size() != need_in)
            throw structure_error("maximal_paths_at_ray: star poset is not a two-chain interval");
    }

    auto walk = [&](int first) {
        LabeledPath p;
        int cur = src, nxt = first;
        // the ray of the source cone replaced by the first arrow
        for (int rid : star[static_cast<std::size_t>(src)].ray_ids)
            if (rid != *id && !star[static_cast<std::size_t>(first)].contains_id(rid))
                p.first_exchanged = f.ray(rid);
        while (true) {
            p.arrows.push_back(lab.at({cur, nxt}));
            cur = nxt;
            const auto& nexts = outd[static_cast<std::size_t>(cur)];
            if (nexts.empty()) break;
            nxt = nexts.front();
        }
        return p;
    };
    const auto& starts = outd[static_cast<std::size_t>(src)];
    LabeledPath p = walk(starts[0]);
    LabeledPath q = walk(starts[1]);
    // Deterministic order: chain whose first exchanged ray is smaller first.
    if (q.first_exchanged < p.first_exchanged) std::swap(p, q);
    return {p, q};
}

std::string to_string(PathTemplate t) {
    switch (t) {
        case PathTemplate::I: return "i";
        case PathTemplate::II: return "ii";
        case PathTemplate::III: return "iii";
        case PathTemplate::IV: return "iv";
    }
    return "?";
}

std::optional<PathTemplate> match_chain(const LabeledPath& p) {
    const auto& a = p.arrows;
    auto under_in = [&](std::size_t i, Int lo, Int hi) { return a[i].under >= lo && a[i].under <= hi; };
    if (a.size() == 2 && a[0].over == 0 && a[1].over == 0 && under_in(0, 0, 2) && under_in(1, 0, 2))
        return PathTemplate::I;
    if (a.size() == 3 && a[0].over == 1 && a[1].over == 1 && a[2].over == 1 && under_in(0, 0, 1) &&
        under_in(1, 0, 1) && under_in(2, 0, 1))
        return PathTemplate::II;
    if (a.size() == 4 && a[0].over == 2 && a[1].over == 1 && a[2].over == 2 && a[3].over == 1 &&
        a[0].under == 0 && a[2].under == 0 && under_in(1, 0, 1) && under_in(3, 0, 1))
        return PathTemplate::III;
    if (a.size() == 4 && a[0].over == 1 && a[1].over == 2 && a[2].over == 1 && a[3].over == 2 &&
        a[1].under == 0 && a[3].under == 0 && under_in(0, 0, 1) && under_in(2, 0, 1))
        return PathTemplate::IV;
    return std::nullopt;
}

std::pair<PathTemplate, PathTemplate> match_template(const LabeledPath& p, const LabeledPath& q) {
    auto mp = match_chain(p);
    auto mq = match_chain(q);
    if (!mp || !mq) throw structure_error("match_template: chain matches no template form");
    return {*mp, *mq};
}

bool all_ray_templates_ok(const Fan& f) {
    for (const Vec& r : f.rays()) {
        try {
            auto [p, q] = maximal_paths_at_ray(f, r);
            match_template(p, q);
        } catch (const structure_error&) {
            return false;
        }
    }
    return true;
}

}  // namespace gfan
