#include "gfan/exactlin.hpp"

#include <doctest.h>

#include <random>

using namespace gfan;

TEST_CASE("det on rank-3 matrices") {
    CHECK(det(Mat{Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)}) == 1);
    CHECK(det(Mat{Vec(1, 1, 1), Vec(1, 0, -1), Vec(1, 0, 1)}) == -2);
    CHECK(det(Mat{Vec(1, 0, 0), Vec(2, -1, 0), Vec(0, 0, 1)}) == -1);
    Mat not_square{Vec(1, 0, 0), Vec(0, 1, 0)};
    not_square.rank = 3;
    CHECK_THROWS_AS(det(not_square), dimension_error);
}

TEST_CASE("det multiplicativity on random small matrices") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<Int> coef(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::array<Vec, 3> a, b;
        for (auto& v : a) v = Vec(coef(rng), coef(rng), coef(rng));
        for (auto& v : b) v = Vec(coef(rng), coef(rng), coef(rng));
        // columns of M*N are M applied to the columns of N
        auto apply = [&](const Vec& x) {
            Vec r(0, 0, 0);
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < 3; ++k) r[i] = r[i] + a[static_cast<std::size_t>(k)][i] * x[k];
            return r;
        };
        Mat mn{apply(b[0]), apply(b[1]), apply(b[2])};
        CHECK(det(mn) == det(Mat{a[0], a[1], a[2]}) * det(Mat{b[0], b[1], b[2]}));
    }
}

TEST_CASE("make_primitive") {
    CHECK(make_primitive(Vec(2, -2, 1)) == Vec(2, -2, 1));
    CHECK(make_primitive(Vec(2, 0, -2)) == Vec(1, 0, -1));
    CHECK(make_primitive(Vec(0, -4, 2)) == Vec(0, -2, 1));
    CHECK_THROWS_AS(make_primitive(Vec(0, 0, 0)), std::domain_error);

    std::mt19937 rng(7);
    std::uniform_int_distribution<Int> coef(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        Vec v(coef(rng), coef(rng), coef(rng));
        if (v.is_zero()) continue;
        Vec p = make_primitive(v);
        CHECK(make_primitive(p) == p);
    }
}

TEST_CASE("solve_normal") {
    CHECK(solve_normal(Mat{Vec(1, 0, 0), Vec(2, -1, 0), Vec(0, 0, 1)}) == Vec(1, 1, 1));
    CHECK(solve_normal(Mat{Vec(1, -1, 0), Vec(0, -1, 0), Vec(0, -2, 1)}) == Vec(0, -1, -1));
    CHECK(solve_normal(Mat{Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)}) == Vec(1, 1, 1));
    CHECK_THROWS_AS(solve_normal(Mat{Vec(1, 0, 0), Vec(1, 2, 0), Vec(0, 0, 1)}),
                    not_unimodular_error);
}

namespace {

// Random unimodular matrix as a product of elementary column operations.
Mat random_unimodular(std::mt19937& rng) {
    std::array<Vec, 3> cols = {Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)};
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<Int> mult(-2, 2);
    for (int step = 0; step < 6; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        cols[static_cast<std::size_t>(i)] =
            cols[static_cast<std::size_t>(i)] + mult(rng) * cols[static_cast<std::size_t>(j)];
    }
    return Mat{cols[0], cols[1], cols[2]};
}

}  // namespace

TEST_CASE("solve_normal hits 1 on every column of a unimodular basis") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        Mat m = random_unimodular(rng);
        REQUIRE(std::abs(det(m)) == 1);
        Vec v = solve_normal(m);
        for (const Vec& col : m.cols) CHECK(dot(col, v) == 1);
    }
}

TEST_CASE("unimodular_complement") {
    Mat c = unimodular_complement(Vec(0, 0, 1));
    REQUIRE(c.cols.size() == 2);
    CHECK(det3(Vec(0, 0, 1), c.cols[0], c.cols[1]) != 0);
    CHECK(c.cols[0] == Vec(1, 0, 0));
    CHECK(c.cols[1] == Vec(0, 1, 0));

    Mat c2 = unimodular_complement(Vec(1, -1, 0));
    Int d2 = det3(Vec(1, -1, 0), c2.cols[0], c2.cols[1]);
    CHECK((d2 == 1 || d2 == -1));

    Mat c3 = unimodular_complement(Vec(2, -2, 1));
    Int d3 = det3(Vec(2, -2, 1), c3.cols[0], c3.cols[1]);
    CHECK((d3 == 1 || d3 == -1));

    CHECK_THROWS_AS(unimodular_complement(Vec(2, 0, -2)), std::domain_error);
    CHECK_THROWS_AS(unimodular_complement(Vec(0, 0, 0)), std::domain_error);

    std::mt19937 rng(13);
    std::uniform_int_distribution<Int> coef(-7, 7);
    for (int trial = 0; trial < 300; ++trial) {
        Vec v(coef(rng), coef(rng), coef(rng));
        if (v.is_zero()) continue;
        Vec w = make_primitive(v);
        Mat comp = unimodular_complement(w);
        Int d = det3(w, comp.cols[0], comp.cols[1]);
        CHECK((d == 1 || d == -1));
        // determinism
        Mat again = unimodular_complement(w);
        CHECK(again.cols[0] == comp.cols[0]);
        CHECK(again.cols[1] == comp.cols[1]);
    }
}

TEST_CASE("rank-2 complement and normal") {
    Mat c = unimodular_complement(Vec(1, -2));
    REQUIRE(c.cols.size() == 1);
    CHECK((det2(Vec(1, -2), c.cols[0]) == 1 || det2(Vec(1, -2), c.cols[0]) == -1));
    CHECK(solve_normal(Mat{Vec(1, 0), Vec(1, -1)}) == Vec(1, 0));
}

TEST_CASE("overflow is loud, not wrapping") {
    CHECK_THROWS_AS(checked_mul(Int(1) << 40, Int(1) << 40), std::overflow_error);
    CHECK_THROWS_AS(checked_add(std::numeric_limits<Int>::max(), Int(1)), std::overflow_error);
}

TEST_CASE("cone interior intersection, exact") {
    std::vector<Vec> pos = {Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)};
    std::vector<Vec> neg = {Vec(-1, 0, 0), Vec(0, -1, 0), Vec(0, 0, -1)};
    CHECK_FALSE(cones_interiors_intersect(pos, neg));
    std::vector<Vec> tilted = {Vec(1, 1, 1), Vec(0, 1, 0), Vec(0, 0, 1)};
    CHECK(cones_interiors_intersect(pos, tilted));
    // sharing a facet only
    std::vector<Vec> next = {Vec(-1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)};
    CHECK_FALSE(cones_interiors_intersect(pos, next));
}
