#pragma once

// Integer-matrix normal forms: Hermite form (canonical row echelon over Z),
// left kernels, and Smith form with column transforms. These are the exact
// primitives behind canonical submodule matrices, lattice intersections,
// preimages, and quotient structure.
//
// Conventions: matrices act on row vectors; the "row lattice" of A is
// { c*A : c integer row }. Hermite form here is upper staircase with
// positive pivots and entries above each pivot reduced into [0, pivot).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "intmath.hpp"

namespace secmod {

struct Mat {
    int rows = 0, cols = 0;
    std::vector<i64> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    i64& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    i64 at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int k) {
        Mat m(k, k);
        for (int i = 0; i < k; ++i) m.at(i, i) = 1;
        return m;
    }
    static Mat diagonal(const std::vector<i64>& d) {
        Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
        return m;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
    }
    /// row_i += q * row_j
    void add_row(int i, int j, i64 q) {
        if (q == 0) return;
        for (int c = 0; c < cols; ++c) at(i, c) += q * at(j, c);
    }
    void negate_row(int i) {
        for (int c = 0; c < cols; ++c) at(i, c) = -at(i, c);
    }

    bool operator==(const Mat&) const = default;
};

inline Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            i64 v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

/// Stack b's rows under a's (column counts must match).
inline Mat mat_stack(const Mat& a, const Mat& b) {
    if (a.rows == 0) return b;
    if (b.rows == 0) return a;
    if (a.cols != b.cols) throw std::invalid_argument("mat_stack: column mismatch");
    Mat s(a.rows + b.rows, a.cols);
    std::copy(a.a.begin(), a.a.end(), s.a.begin());
    std::copy(b.a.begin(), b.a.end(), s.a.begin() + a.a.size());
    return s;
}

namespace detail {

// In-place staircase reduction over columns [0, limit_cols). Also applies the
// same row operations to `shadow` when non-null (used for transforms/kernels).
// Returns the rank (number of pivot rows) and records pivot columns.
inline int staircase(Mat& m, Mat* shadow, int limit_cols, std::vector<int>* pivot_cols) {
    int r = 0;
    for (int c = 0; c < limit_cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0 && (piv < 0 || std::abs(m.at(i, c)) < std::abs(m.at(piv, c)))) piv = i;
        if (piv < 0) continue;
        m.swap_rows(r, piv);
        if (shadow) shadow->swap_rows(r, piv);
        for (int i = r + 1; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            auto [g, x, y] = extended_gcd(m.at(r, c), m.at(i, c));
            i64 p = m.at(r, c) / g, q = m.at(i, c) / g;
            for (int j = 0; j < m.cols; ++j) {
                i64 vr = m.at(r, j), vi = m.at(i, j);
                m.at(r, j) = x * vr + y * vi;
                m.at(i, j) = -q * vr + p * vi;
            }
            if (shadow) {
                for (int j = 0; j < shadow->cols; ++j) {
                    i64 vr = shadow->at(r, j), vi = shadow->at(i, j);
                    shadow->at(r, j) = x * vr + y * vi;
                    shadow->at(i, j) = -q * vr + p * vi;
                }
            }
        }
        if (m.at(r, c) < 0) {
            m.negate_row(r);
            if (shadow) shadow->negate_row(r);
        }
        for (int j = 0; j < r; ++j) {
            i64 q = floor_div(m.at(j, c), m.at(r, c));
            m.add_row(j, r, -q);
            if (shadow) shadow->add_row(j, r, -q);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

} // namespace detail

/// Canonical Hermite form of the row lattice of m: pivot entries positive,
/// entries above each pivot reduced into [0, pivot), zero rows trimmed.
inline Mat hermite_normal_form(Mat m) {
    int rank = detail::staircase(m, nullptr, m.cols, nullptr);
    Mat h(rank, m.cols);
    std::copy(m.a.begin(), m.a.begin() + static_cast<size_t>(rank) * m.cols, h.a.begin());
    return h;
}

struct HermiteTransform {
    Mat h;                       // full (untrimmed) reduced matrix, U * input = h
    Mat u;                       // unimodular row transform
    int rank = 0;
    std::vector<int> pivot_cols; // pivot column per staircase row
};

inline HermiteTransform hermite_with_transform(Mat m) {
    HermiteTransform t;
    t.u = Mat::identity(m.rows);
    t.rank = detail::staircase(m, &t.u, m.cols, &t.pivot_cols);
    t.h = std::move(m);
    return t;
}

/// Basis (as rows) of the left kernel { u : u * m = 0 }. The basis spans the
/// full kernel lattice (it comes from a unimodular transform).
inline Mat left_kernel(const Mat& m) {
    Mat work = m;
    Mat u = Mat::identity(m.rows);
    int rank = detail::staircase(work, &u, m.cols, nullptr);
    Mat k(m.rows - rank, m.rows);
    for (int i = rank; i < m.rows; ++i)
        for (int j = 0; j < m.rows; ++j) k.at(i - rank, j) = u.at(i, j);
    return k;
}

/// Coefficients c with c * echelon = x, where `echelon` is a trimmed canonical
/// Hermite form. Returns nullopt when x is not in the row lattice.
inline std::optional<std::vector<i64>> solve_row_combination(const Mat& echelon,
                                                             const std::vector<i64>& x) {
    if (static_cast<int>(x.size()) != echelon.cols)
        throw std::invalid_argument("solve_row_combination: length mismatch");
    std::vector<i64> rem = x, coeff(echelon.rows, 0);
    int row = 0;
    for (int c = 0; c < echelon.cols; ++c) {
        bool pivot_here = row < echelon.rows && echelon.at(row, c) != 0;
        // find the pivot column of `row`: first nonzero entry
        if (pivot_here) {
            for (int cc = 0; cc < c; ++cc)
                if (echelon.at(row, cc) != 0) { pivot_here = false; break; }
        }
        if (pivot_here) {
            if (rem[c] % echelon.at(row, c) != 0) return std::nullopt;
            i64 q = rem[c] / echelon.at(row, c);
            coeff[row] = q;
            if (q != 0)
                for (int j = c; j < echelon.cols; ++j) rem[j] -= q * echelon.at(row, j);
            ++row;
        } else if (rem[c] != 0) {
            return std::nullopt;
        }
    }
    for (i64 v : rem)
        if (v != 0) return std::nullopt;
    return coeff;
}

struct SmithResult {
    Mat s;    // u * input * v = s, diagonal, s(i,i) | s(i+1,i+1), nonnegative
    Mat u;    // unimodular
    Mat v;    // unimodular
    Mat vinv; // v * vinv = identity
};

/// Smith normal form with transforms. Diagonal entries are >= 0 and form a
/// divisibility chain; zero entries (rank deficiency) sort to the end.
inline SmithResult smith_normal_form(Mat m) {
    const int R = m.rows, C = m.cols;
    SmithResult res;
    res.u = Mat::identity(R);
    res.v = Mat::identity(C);
    res.vinv = Mat::identity(C);

    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < R; ++r) std::swap(m.at(r, i), m.at(r, j));
        for (int r = 0; r < C; ++r) std::swap(res.v.at(r, i), res.v.at(r, j));
        res.vinv.swap_rows(i, j);
    };
    // col_i += q * col_j, with the inverse operation applied to vinv rows.
    auto col_add = [&](int i, int j, i64 q) {
        if (q == 0) return;
        for (int r = 0; r < R; ++r) m.at(r, i) += q * m.at(r, j);
        for (int r = 0; r < C; ++r) res.v.at(r, i) += q * res.v.at(r, j);
        res.vinv.add_row(j, i, -q);
    };
    // general 2x2 unimodular column combo on (ci, cj):
    //   new ci = x*ci + y*cj ; new cj = -(b/g)*ci + (a/g)*cj
    // when av | bv this degenerates to col_cj -= (bv/av) * col_ci, which must
    // be taken literally so the pivot column stays untouched
    auto col_combine = [&](int ci, int cj, i64 av, i64 bv) {
        if (bv % av == 0) {
            col_add(cj, ci, -(bv / av));
            return;
        }
        auto [g, x, y] = extended_gcd(av, bv);
        i64 p = av / g, q = bv / g;
        for (int r = 0; r < R; ++r) {
            i64 vi = m.at(r, ci), vj = m.at(r, cj);
            m.at(r, ci) = x * vi + y * vj;
            m.at(r, cj) = -q * vi + p * vj;
        }
        for (int r = 0; r < C; ++r) {
            i64 vi = res.v.at(r, ci), vj = res.v.at(r, cj);
            res.v.at(r, ci) = x * vi + y * vj;
            res.v.at(r, cj) = -q * vi + p * vj;
        }
        // inverse block [[p, -y],[q, x]] applied to vinv rows (ci, cj)
        for (int c = 0; c < C; ++c) {
            i64 vi = res.vinv.at(ci, c), vj = res.vinv.at(cj, c);
            res.vinv.at(ci, c) = p * vi + q * vj;
            res.vinv.at(cj, c) = -y * vi + x * vj;
        }
    };
    auto row_combine = [&](int ri, int rj, i64 av, i64 bv) {
        if (bv % av == 0) {
            i64 q = bv / av;
            m.add_row(rj, ri, -q);
            res.u.add_row(rj, ri, -q);
            return;
        }
        auto [g, x, y] = extended_gcd(av, bv);
        i64 p = av / g, q = bv / g;
        for (int c = 0; c < C; ++c) {
            i64 vi = m.at(ri, c), vj = m.at(rj, c);
            m.at(ri, c) = x * vi + y * vj;
            m.at(rj, c) = -q * vi + p * vj;
        }
        for (int c = 0; c < res.u.cols; ++c) {
            i64 vi = res.u.at(ri, c), vj = res.u.at(rj, c);
            res.u.at(ri, c) = x * vi + y * vj;
            res.u.at(rj, c) = -q * vi + p * vj;
        }
    };

    const int n = std::min(R, C);
    for (int t = 0; t < n; ++t) {
        // pivot selection: smallest nonzero magnitude in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j)
                if (m.at(i, j) != 0 &&
                    (pi < 0 || std::abs(m.at(i, j)) < std::abs(m.at(pi, pj)))) { pi = i; pj = j; }
        if (pi < 0) break;
        m.swap_rows(t, pi);
        res.u.swap_rows(t, pi);
        col_swap(t, pj);

        while (true) {
            // clear column t and row t outside the pivot; every combine either
            // zeroes an entry without touching the pivot or strictly shrinks it
            bool changed = true;
            while (changed) {
                changed = false;
                for (int i = t + 1; i < R; ++i)
                    if (m.at(i, t) != 0) { row_combine(t, i, m.at(t, t), m.at(i, t)); changed = true; }
                for (int j = t + 1; j < C; ++j)
                    if (m.at(t, j) != 0) { col_combine(t, j, m.at(t, t), m.at(t, j)); changed = true; }
            }
            if (m.at(t, t) < 0) {
                m.negate_row(t);
                res.u.negate_row(t);
            }
            // divisibility: pull a non-multiple into column t and shrink the pivot
            int bi = -1, bj = -1;
            for (int i = t + 1; i < R && bi < 0; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) { bi = i; bj = j; break; }
            if (bi < 0) break;
            col_add(t, bj, 1);
        }
    }
    res.s = std::move(m);
    return res;
}

} // namespace secmod
