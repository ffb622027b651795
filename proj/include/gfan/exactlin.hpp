#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Exact integer linear algebra for lattice ranks 2 and 3.
//
// All arithmetic is overflow-checked 64-bit: the kernels below throw
// overflow_error instead of wrapping, so every returned value is exact.

namespace gfan {

using Int = std::int64_t;

struct dimension_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_unimodular_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct structure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}
inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
    return r;
}
inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

Int gcd_int(Int a, Int b);

// Lattice vector of rank 2 or 3. Unused slots stay zero, so lexicographic
// comparison and hashing work uniformly.
struct Vec {
    std::array<Int, 3> c{0, 0, 0};
    int rank = 3;

    Vec() = default;
    Vec(Int x, Int y) : c{x, y, 0}, rank(2) {}
    Vec(Int x, Int y, Int z) : c{x, y, z}, rank(3) {}

    Int operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    Int& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }

    friend bool operator==(const Vec& a, const Vec& b) { return a.rank == b.rank && a.c == b.c; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
    friend bool operator<(const Vec& a, const Vec& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.c < b.c;
    }

    friend Vec operator+(const Vec& a, const Vec& b) {
        Vec r = a;
        for (int i = 0; i < a.rank; ++i) r[i] = checked_add(a[i], b[i]);
        return r;
    }
    friend Vec operator-(const Vec& a, const Vec& b) {
        Vec r = a;
        for (int i = 0; i < a.rank; ++i) r[i] = checked_sub(a[i], b[i]);
        return r;
    }
    friend Vec operator-(const Vec& a) {
        Vec r = a;
        for (int i = 0; i < a.rank; ++i) r[i] = -a[i];
        return r;
    }
    friend Vec operator*(Int s, const Vec& a) {
        Vec r = a;
        for (int i = 0; i < a.rank; ++i) r[i] = checked_mul(s, a[i]);
        return r;
    }
};

inline Int dot(const Vec& a, const Vec& b) {
    Int r = 0;
    for (int i = 0; i < a.rank; ++i) r = checked_add(r, checked_mul(a[i], b[i]));
    return r;
}

std::string to_string(const Vec& v);

// Column matrix; square when used for determinants.
struct Mat {
    std::vector<Vec> cols;
    int rank = 3;

    Mat() = default;
    Mat(std::initializer_list<Vec> cs) : cols(cs) { if (!cols.empty()) rank = cols.front().rank; }
    explicit Mat(std::vector<Vec> cs) : cols(std::move(cs)) { if (!cols.empty()) rank = cols.front().rank; }
};

Int det2(const Vec& a, const Vec& b);
Int det3(const Vec& a, const Vec& b, const Vec& c);
Int det(const Mat& m);

// v / gcd(|entries|), sign preserved. Throws on the zero vector.
Vec make_primitive(const Vec& v);

// The unique integer v with <w_j, v> = 1 for every column w_j of a
// unimodular basis. Cramer's rule; throws not_unimodular_error otherwise.
Vec solve_normal(const Mat& basis);

// rank-1 further columns completing a primitive w to a |det|=1 lattice
// basis. Deterministic: Hermite-style reduction with smallest-index pivots.
Mat unimodular_complement(const Vec& w);

// Exact feasibility of {sum_i l_i A_i = sum_j m_j B_j, l_i >= 1, m_j >= 1}
// via Fourier-Motzkin elimination. Used for the pairwise cone interior test.
bool cones_interiors_intersect(const std::vector<Vec>& a, const std::vector<Vec>& b);

}  // namespace gfan
