#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "secmod/normal_form.hpp"

using namespace secmod;

namespace {

Mat random_matrix(std::mt19937_64& rng, int rows, int cols, i64 lo, i64 hi) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = lo + static_cast<i64>(rng() % static_cast<unsigned long long>(hi - lo + 1));
    return m;
}

// Row-lattice membership by direct staircase solving against the HNF.
bool in_row_lattice(const Mat& hnf, std::vector<i64> x) {
    return solve_row_combination(hnf, x).has_value();
}

// gcd of all t x t minors, computed by brute-force expansion (test oracle).
i64 minor_gcd(const Mat& m, int t) {
    std::vector<int> rows(t), cols(t);
    i64 g = 0;
    std::function<void(int, int)> pick_rows = [&](int start, int depth) {
        if (depth == t) {
            std::function<void(int, int)> pick_cols = [&](int cstart, int cdepth) {
                if (cdepth == t) {
                    // Laplace expansion determinant
                    std::function<i64(std::vector<int>, std::vector<int>)> det =
                        [&](std::vector<int> rs, std::vector<int> cs) -> i64 {
                        if (rs.size() == 1) return m.at(rs[0], cs[0]);
                        i64 d = 0, sign = 1;
                        for (size_t j = 0; j < cs.size(); ++j) {
                            std::vector<int> rs2(rs.begin() + 1, rs.end()), cs2;
                            for (size_t jj = 0; jj < cs.size(); ++jj)
                                if (jj != j) cs2.push_back(cs[jj]);
                            d += sign * m.at(rs[0], cs[j]) * det(rs2, cs2);
                            sign = -sign;
                        }
                        return d;
                    };
                    g = std::gcd(g, det(rows, cols));
                    return;
                }
                for (int c = cstart; c < m.cols; ++c) {
                    cols[cdepth] = c;
                    pick_cols(c + 1, cdepth + 1);
                }
            };
            pick_cols(0, 0);
            return;
        }
        for (int r = start; r < m.rows; ++r) {
            rows[depth] = r;
            pick_rows(r + 1, depth + 1);
        }
    };
    pick_rows(0, 0);
    return g;
}

} // namespace

TEST(HermiteForm, CanonicalShape) {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 4);
        Mat m = random_matrix(rng, rows, cols, -9, 9);
        Mat h = hermite_normal_form(m);
        // staircase with positive pivots, entries above pivots reduced
        int prev_pivot = -1;
        for (int i = 0; i < h.rows; ++i) {
            int p = 0;
            while (p < h.cols && h.at(i, p) == 0) ++p;
            ASSERT_LT(p, h.cols);
            EXPECT_GT(p, prev_pivot);
            prev_pivot = p;
            EXPECT_GT(h.at(i, p), 0);
            for (int r = 0; r < i; ++r) {
                EXPECT_GE(h.at(r, p), 0);
                EXPECT_LT(h.at(r, p), h.at(i, p));
            }
        }
    }
}

TEST(HermiteForm, PreservesRowLattice) {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 4);
        Mat m = random_matrix(rng, rows, cols, -9, 9);
        Mat h = hermite_normal_form(m);
        Mat h2 = hermite_normal_form(h);
        EXPECT_EQ(h, h2); // idempotent, so the form is canonical for its lattice
        for (int i = 0; i < m.rows; ++i) {
            std::vector<i64> row(m.cols);
            for (int j = 0; j < m.cols; ++j) row[j] = m.at(i, j);
            EXPECT_TRUE(in_row_lattice(h, row));
        }
    }
}

TEST(HermiteForm, RandomCombinationsStayInside) {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        Mat m = random_matrix(rng, 3, 3, -6, 6);
        Mat h = hermite_normal_form(m);
        for (int t = 0; t < 10; ++t) {
            std::vector<i64> x(3, 0);
            for (int i = 0; i < m.rows; ++i) {
                i64 c = static_cast<i64>(rng() % 7) - 3;
                for (int j = 0; j < 3; ++j) x[j] += c * m.at(i, j);
            }
            EXPECT_TRUE(in_row_lattice(h, x));
        }
    }
}

TEST(LeftKernel, AnnihilatesAndHasFullRank) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 4);
        Mat m = random_matrix(rng, rows, cols, -5, 5);
        Mat k = left_kernel(m);
        Mat prod = k.rows ? mat_mul(k, m) : Mat(0, cols);
        for (i64 v : prod.a) EXPECT_EQ(v, 0);
        int rank = hermite_normal_form(m).rows;
        EXPECT_EQ(k.rows, rows - rank);
    }
}

TEST(SmithForm, TransformsAndDivisibility) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
        Mat m = random_matrix(rng, rows, cols, -7, 7);
        auto r = smith_normal_form(m);
        EXPECT_EQ(mat_mul(mat_mul(r.u, m), r.v), r.s);
        EXPECT_EQ(mat_mul(r.v, r.vinv), Mat::identity(cols));
        for (int i = 0; i < r.s.rows; ++i)
            for (int j = 0; j < r.s.cols; ++j)
                if (i != j) EXPECT_EQ(r.s.at(i, j), 0);
        i64 prev = -1;
        for (int i = 0; i < std::min(rows, cols); ++i) {
            i64 d = r.s.at(i, i);
            EXPECT_GE(d, 0);
            if (prev > 0) EXPECT_TRUE(d == 0 || d % prev == 0);
            if (prev == 0) EXPECT_EQ(d, 0);
            prev = d;
        }
    }
}

TEST(SmithForm, MatchesDeterminantalDivisors) {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2); // 2x2 and 3x3 against the oracle
        Mat m = random_matrix(rng, n, n, -6, 6);
        auto r = smith_normal_form(m);
        i64 running = 1;
        for (int t = 1; t <= n; ++t) {
            i64 dk = minor_gcd(m, t);
            if (dk < 0) dk = -dk;
            i64 expected = dk == 0 ? 0 : dk / running;
            EXPECT_EQ(r.s.at(t - 1, t - 1), expected) << "trial " << trial << " t " << t;
            if (dk == 0) break;
            running = dk;
        }
    }
}

TEST(SolveRowCombination, RecoversCoefficients) {
    Mat m(2, 3);
    m.at(0, 0) = 2; m.at(0, 1) = 1; m.at(0, 2) = 0;
    m.at(1, 0) = 0; m.at(1, 1) = 3; m.at(1, 2) = 6;
    Mat h = hermite_normal_form(m);
    std::vector<i64> x = {4, 5, 6}; // 2*row0 + 1*row1
    auto c = solve_row_combination(h, x);
    ASSERT_TRUE(c.has_value());
    std::vector<i64> back(3, 0);
    for (int i = 0; i < h.rows; ++i)
        for (int j = 0; j < 3; ++j) back[j] += (*c)[i] * h.at(i, j);
    EXPECT_EQ(back, x);
    EXPECT_FALSE(solve_row_combination(h, {1, 0, 0}).has_value());
}
