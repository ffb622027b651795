#include "gfan/exactlin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gfan {

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < v.rank; ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

Int det2(const Vec& a, const Vec& b) {
    return checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]));
}

Int det3(const Vec& a, const Vec& b, const Vec& c) {
    Int m0 = checked_sub(checked_mul(b[1], c[2]), checked_mul(b[2], c[1]));
    Int m1 = checked_sub(checked_mul(b[0], c[2]), checked_mul(b[2], c[0]));
    Int m2 = checked_sub(checked_mul(b[0], c[1]), checked_mul(b[1], c[0]));
    return checked_add(checked_sub(checked_mul(a[0], m0), checked_mul(a[1], m1)), checked_mul(a[2], m2));
}

Int det(const Mat& m) {
    if (m.cols.size() != static_cast<std::size_t>(m.rank))
        throw dimension_error("det: matrix is not square");
    if (m.rank == 2) return det2(m.cols[0], m.cols[1]);
    if (m.rank == 3) return det3(m.cols[0], m.cols[1], m.cols[2]);
    throw dimension_error("det: rank must be 2 or 3");
}

Vec make_primitive(const Vec& v) {
    if (v.is_zero()) throw std::domain_error("make_primitive: zero vector");
    Int g = 0;
    for (int i = 0; i < v.rank; ++i) g = gcd_int(g, v[i]);
    Vec r = v;
    for (int i = 0; i < v.rank; ++i) r[i] = v[i] / g;
    return r;
}

Vec solve_normal(const Mat& basis) {
    const Int d = det(basis);
    if (d != 1 && d != -1)
        throw not_unimodular_error("solve_normal: |det| != 1, normal would be non-integral");
    // Rows of the system are the basis columns; Cramer on the transpose.
    Vec out;
    out.rank = basis.rank;
    if (basis.rank == 2) {
        const Vec& u = basis.cols[0];
        const Vec& v = basis.cols[1];
        // [u; v] x = (1,1): x0 = det([1,u1],[1,v1])/det, x1 = det([u0,1],[v0,1])/det
        out[0] = checked_sub(v[1], u[1]) / d;
        out[1] = checked_sub(u[0], v[0]) / d;
        out[2] = 0;
        return out;
    }
    if (basis.rank == 3) {
        const Vec ones(1, 1, 1);
        // Columns of the row matrix [u; v; w] are (u_k, v_k, w_k).
        auto col = [&](int k) { return Vec(basis.cols[0][k], basis.cols[1][k], basis.cols[2][k]); };
        Vec c0 = col(0), c1 = col(1), c2 = col(2);
        Int dt = det3(c0, c1, c2);
        out[0] = det3(ones, c1, c2) / dt;
        out[1] = det3(c0, ones, c2) / dt;
        out[2] = det3(c0, c1, ones) / dt;
        return out;
    }
    throw dimension_error("solve_normal: rank must be 2 or 3");
}

Mat unimodular_complement(const Vec& w) {
    if (w.is_zero()) throw std::domain_error("unimodular_complement: zero vector");
    if (w != make_primitive(w)) throw std::domain_error("unimodular_complement: input not primitive");

    if (w.rank == 2) {
        // Find (x,y) with w0*y - w1*x = 1, i.e. a column forming det 1 with w.
        // Extended gcd with deterministic normalization.
        Int a = w[0], b = w[1];
        Int x0 = 1, x1 = 0, y0 = 0, y1 = 1;
        Int r0 = a, r1 = b;
        while (r1 != 0) {
            Int q = r0 / r1;
            Int t;
            t = checked_sub(r0, checked_mul(q, r1)); r0 = r1; r1 = t;
            t = checked_sub(x0, checked_mul(q, x1)); x0 = x1; x1 = t;
            t = checked_sub(y0, checked_mul(q, y1)); y0 = y1; y1 = t;
        }
        // r0 = gcd = +-1 = x0*a + y0*b.  Column v = (-y0, x0)/r0 gives det[w|v] = 1.
        Vec v(-y0 / r0, x0 / r0);
        Mat m{v};
        m.rank = 2;
        return m;
    }
    if (w.rank != 3) throw dimension_error("unimodular_complement: rank must be 2 or 3");

    // Hermite-style column reduction of the identity against w: find the
    // pivot (smallest index first, ties by absolute value then sign, among
    // nonzero entries), clear the other coordinates of w with unimodular
    // column operations applied to the basis, then drop the pivot column.
    std::array<Vec, 3> basis = {Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)};
    Vec r = w;  // coordinates of w in the running basis
    while (true) {
        int piv = -1;
        for (int i = 0; i < 3; ++i) {
            if (r[i] == 0) continue;
            if (piv == -1) { piv = i; continue; }
            Int ap = r[piv] < 0 ? -r[piv] : r[piv];
            Int ai = r[i] < 0 ? -r[i] : r[i];
            if (ai < ap || (ai == ap && r[i] > 0 && r[piv] < 0)) piv = i;
        }
        bool done = true;
        for (int i = 0; i < 3; ++i)
            if (i != piv && r[i] != 0) done = false;
        if (done) {
            // r[piv] = +-1 because w is primitive.
            if (r[piv] != 1 && r[piv] != -1)
                throw structure_error("unimodular_complement: reduction did not reach a unit");
            if (r[piv] == -1) {
                basis[static_cast<std::size_t>(piv)] = -basis[static_cast<std::size_t>(piv)];
                r[piv] = 1;
            }
            // w = basis[piv]; the other two basis vectors complete it.
            Mat m;
            m.rank = 3;
            for (int i = 0; i < 3; ++i)
                if (i != piv) m.cols.push_back(basis[static_cast<std::size_t>(i)]);
            Int dcheck = det3(w, m.cols[0], m.cols[1]);
            if (dcheck != 1 && dcheck != -1)
                throw structure_error("unimodular_complement: completion is not unimodular");
            return m;
        }
        for (int i = 0; i < 3; ++i) {
            if (i == piv || r[i] == 0) continue;
            Int q = r[i] / r[piv];
            if (q == 0) continue;
            // column op: coordinate i of w decreases by q * r[piv];
            // compensate by adding q * basis[i] to basis[piv].
            r[i] = checked_sub(r[i], checked_mul(q, r[piv]));
            basis[static_cast<std::size_t>(piv)] =
                basis[static_cast<std::size_t>(piv)] + q * basis[static_cast<std::size_t>(i)];
        }
        // If all off-pivot entries became zero we finish next round; if some
        // are nonzero but smaller than the pivot, the pivot choice rotates.
        bool any = false;
        for (int i = 0; i < 3; ++i)
            if (i != piv && r[i] != 0) any = true;
        if (!any) continue;
    }
}

namespace {

// One inequality sum_k coef[k] * x_k >= rhs over `nvar` variables.
struct Row {
    std::vector<Int> coef;
    Int rhs;
};

void normalize_row(Row& row) {
    Int g = 0;
    for (Int c : row.coef) g = gcd_int(g, c);
    g = gcd_int(g, row.rhs);
    if (g > 1) {
        for (Int& c : row.coef) c /= g;
        row.rhs /= g;
    }
}

// Feasibility of {rows} over the rationals by Fourier-Motzkin elimination.
bool fm_feasible(std::vector<Row> rows, int nvar) {
    for (int v = nvar - 1; v >= 0; --v) {
        std::vector<Row> pos, neg, keep;
        for (auto& r : rows) {
            if (r.coef[static_cast<std::size_t>(v)] > 0)
                pos.push_back(std::move(r));
            else if (r.coef[static_cast<std::size_t>(v)] < 0)
                neg.push_back(std::move(r));
            else
                keep.push_back(std::move(r));
        }
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                // p: a x_v + ... >= c (a>0);  n: -b x_v + ... >= d (b>0)
                Int a = p.coef[static_cast<std::size_t>(v)];
                Int b = -n.coef[static_cast<std::size_t>(v)];
                Row comb;
                comb.coef.assign(static_cast<std::size_t>(nvar), 0);
                for (int k = 0; k < nvar; ++k)
                    comb.coef[static_cast<std::size_t>(k)] =
                        checked_add(checked_mul(b, p.coef[static_cast<std::size_t>(k)]),
                                    checked_mul(a, n.coef[static_cast<std::size_t>(k)]));
                comb.rhs = checked_add(checked_mul(b, p.rhs), checked_mul(a, n.rhs));
                comb.coef[static_cast<std::size_t>(v)] = 0;
                normalize_row(comb);
                keep.push_back(std::move(comb));
            }
        }
        rows = std::move(keep);
        // Drop trivially satisfied rows, detect contradictions early.
        std::vector<Row> pruned;
        for (auto& r : rows) {
            bool allzero = true;
            for (Int c : r.coef)
                if (c != 0) allzero = false;
            if (allzero) {
                if (r.rhs > 0) return false;  // 0 >= positive
                continue;
            }
            pruned.push_back(std::move(r));
        }
        rows = std::move(pruned);
    }
    for (const auto& r : rows)
        if (r.rhs > 0) return false;
    return true;
}

}  // namespace

bool cones_interiors_intersect(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    const int rk = a.empty() ? (b.empty() ? 3 : b.front().rank) : a.front().rank;
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    const int nvar = na + nb;
    std::vector<Row> rows;
    // Equalities sum l_i a_i - sum m_j b_j = 0, one pair of >= rows per coordinate.
    for (int k = 0; k < rk; ++k) {
        Row r1;
        r1.coef.assign(static_cast<std::size_t>(nvar), 0);
        for (int i = 0; i < na; ++i) r1.coef[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)][k];
        for (int j = 0; j < nb; ++j) r1.coef[static_cast<std::size_t>(na + j)] = -b[static_cast<std::size_t>(j)][k];
        r1.rhs = 0;
        Row r2 = r1;
        for (Int& c : r2.coef) c = -c;
        rows.push_back(std::move(r1));
        rows.push_back(std::move(r2));
    }
    // Strict positivity, scaled to l_i >= 1, m_j >= 1.
    for (int v = 0; v < nvar; ++v) {
        Row r;
        r.coef.assign(static_cast<std::size_t>(nvar), 0);
        r.coef[static_cast<std::size_t>(v)] = 1;
        r.rhs = 1;
        rows.push_back(std::move(r));
    }
    return fm_feasible(std::move(rows), nvar);
}

}  // namespace gfan
