#include <gtest/gtest.h>

#include "secmod/lattice.hpp"

using namespace secmod;

namespace {
Submodule cyc(const FinModule& m, Element e) { return span(m, {std::move(e)}); }
} // namespace

TEST(Enumerate, CountsMatchKnownLattices) {
    EXPECT_EQ(enumerate_submodules(make_module(0, {12})).size(), 6);     // divisors of 12
    EXPECT_EQ(enumerate_submodules(make_module(0, {2, 2})).size(), 5);   // Klein group
    EXPECT_EQ(enumerate_submodules(make_module(0, {})).size(), 1);       // zero module
    // cyclic groups: one subgroup per divisor
    for (i64 n : {2, 7, 16, 36, 60, 210}) {
        auto l = enumerate_submodules(make_module(0, {n}));
        int divisors = 0;
        for (i64 d = 1; d <= n; ++d)
            if (n % d == 0) ++divisors;
        EXPECT_EQ(l.size(), divisors) << n;
    }
    // elementary abelian: Gaussian binomial column sums
    EXPECT_EQ(enumerate_submodules(make_module(0, {2, 2, 2})).size(), 16);
    EXPECT_EQ(enumerate_submodules(make_module(0, {3, 3})).size(), 6);
}

TEST(Enumerate, DeterministicAndDeduplicated) {
    FinModule m = make_module(0, {2, 12});
    auto a = enumerate_submodules(m);
    auto b = enumerate_submodules(m);
    ASSERT_EQ(a.size(), b.size());
    for (int i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a.nodes[static_cast<size_t>(i)], b.nodes[static_cast<size_t>(i)]);
        for (int j = 0; j < i; ++j)
            EXPECT_FALSE(a.nodes[static_cast<size_t>(i)] == a.nodes[static_cast<size_t>(j)]);
    }
    // order ascending
    for (int i = 0; i + 1 < a.size(); ++i)
        EXPECT_LE(a.nodes[static_cast<size_t>(i)].order(), a.nodes[static_cast<size_t>(i + 1)].order());
}

TEST(Enumerate, BoundExceededIsLoud) {
    EXPECT_THROW(enumerate_submodules(make_module(0, {2, 2, 2}), 7), BoundExceeded);
}

TEST(CompletelyIrreducible, SpecValues) {
    FinModule z12 = make_module(0, {12});
    auto l = enumerate_submodules(z12);
    auto ci = completely_irreducibles(l);
    // {0,4,8}, {0,3,6,9}, {0,2,4,6,8,10} and nothing else
    EXPECT_EQ(ci.size(), 3u);
    EXPECT_NE(std::find(ci.begin(), ci.end(), cyc(z12, {4})), ci.end());
    EXPECT_NE(std::find(ci.begin(), ci.end(), cyc(z12, {3})), ci.end());
    EXPECT_NE(std::find(ci.begin(), ci.end(), cyc(z12, {2})), ci.end());
    EXPECT_EQ(std::find(ci.begin(), ci.end(), cyc(z12, {6})), ci.end()); // 3Z n 2Z = 6Z

    // chain lattice: every proper submodule including 0
    FinModule z8 = make_module(0, {8});
    auto l8 = enumerate_submodules(z8);
    EXPECT_EQ(completely_irreducibles(l8).size(), 3u);
    EXPECT_TRUE(l8.flag_ci[0]); // the zero submodule

    // Klein group: the three lines only
    auto lk = enumerate_submodules(make_module(0, {2, 2}));
    auto cik = completely_irreducibles(lk);
    EXPECT_EQ(cik.size(), 3u);
    for (const auto& s : cik) EXPECT_EQ(s.order(), 2);
}

TEST(PrimeSubmodules, SpecValues) {
    FinModule z12 = make_module(0, {12});
    auto l = enumerate_submodules(z12);
    EXPECT_TRUE(is_prime_submodule(cyc(z12, {2})));
    EXPECT_TRUE(is_prime_submodule(cyc(z12, {3})));
    EXPECT_FALSE(is_prime_submodule(cyc(z12, {4})));
    EXPECT_FALSE(is_prime_submodule(cyc(z12, {6})));
    EXPECT_THROW(is_prime_submodule(full_submodule(z12)), std::invalid_argument);

    auto primes = prime_submodules(l);
    EXPECT_EQ(primes.size(), 2u);

    FinModule z4 = make_module(0, {4});
    EXPECT_FALSE(is_prime_submodule(zero_submodule(z4)));

    // lattice flags agree with the standalone quantifier
    for (auto factors : std::vector<std::vector<i64>>{{12}, {2, 4}, {2, 2, 3}, {9, 3}}) {
        FinModule m = make_module(0, factors);
        auto lm = enumerate_submodules(m);
        for (int i = 0; i < lm.size(); ++i) {
            if (i == lm.full_index) continue;
            EXPECT_EQ(static_cast<bool>(lm.flag_prime[static_cast<size_t>(i)]),
                      is_prime_submodule(lm.nodes[static_cast<size_t>(i)]))
                << "node " << i;
        }
    }
}

TEST(PrimeSubmodules, MaximalWithPrimeIndexIsPrime) {
    for (auto factors : std::vector<std::vector<i64>>{{12}, {8}, {2, 4}, {2, 2, 3}, {3, 9}}) {
        FinModule m = make_module(0, factors);
        auto l = enumerate_submodules(m);
        for (int i = 0; i < l.size(); ++i) {
            if (i == l.full_index) continue;
            bool maximal = l.covers_above[static_cast<size_t>(i)].size() == 1 &&
                           l.covers_above[static_cast<size_t>(i)][0] == l.full_index;
            if (maximal && is_prime_number(m.order() / l.nodes[static_cast<size_t>(i)].order()))
                EXPECT_TRUE(l.flag_prime[static_cast<size_t>(i)]);
        }
    }
}

TEST(MRadical, SpecValues) {
    FinModule z12 = make_module(0, {12});
    auto l = enumerate_submodules(z12);
    EXPECT_EQ(m_radical(l, zero_submodule(z12)), cyc(z12, {6}));
    EXPECT_EQ(m_radical(l, full_submodule(z12)), full_submodule(z12));
    for (const auto& p : prime_submodules(l)) EXPECT_EQ(m_radical(l, p), p);
}

TEST(SecondRadical, SpecValues) {
    FinModule z12 = make_module(0, {12});
    auto l = enumerate_submodules(z12);
    Submodule sec_m = second_radical(full_submodule(z12));
    EXPECT_EQ(sec_m, cyc(z12, {2}));
    EXPECT_EQ(sec_m.order(), 6);
    EXPECT_TRUE(second_radical(zero_submodule(z12)).is_zero());

    FinModule m = make_module(0, {6, 10});
    EXPECT_EQ(second_radical(full_submodule(m)), full_submodule(m));
}

TEST(SecondRadical, DualModesAgree) {
    for (auto factors : std::vector<std::vector<i64>>{{12}, {8}, {2, 4}, {2, 2, 2}, {3, 9}, {2, 12}, {6, 10}}) {
        FinModule m = make_module(0, factors);
        auto l = enumerate_submodules(m);
        for (int i = 0; i < l.size(); ++i) {
            const Submodule& n = l.nodes[static_cast<size_t>(i)];
            EXPECT_EQ(second_radical_definitional(l, n), second_radical(n));
            EXPECT_EQ(l.sec_idx[static_cast<size_t>(i)], l.node_of(second_radical(n)));
        }
    }
}

TEST(SecondRadical, IdempotentAndAnnihilatorLaw) {
    for (auto factors : std::vector<std::vector<i64>>{{12}, {16}, {2, 4}, {2, 2, 3}, {4, 8}}) {
        FinModule m = make_module(0, factors);
        auto l = enumerate_submodules(m);
        for (const auto& n : l.nodes) {
            Submodule s = second_radical(n);
            EXPECT_EQ(second_radical(s), s);
            if (!n.is_zero())
                EXPECT_EQ(annihilator(s), ideal_radical(annihilator(n)));
        }
    }
}

TEST(SecondSubmodules, DualCharacterizationsAgree) {
    for (auto factors : std::vector<std::vector<i64>>{{12}, {8}, {2, 4}, {2, 2, 2}, {3, 9}, {6, 10}}) {
        FinModule m = make_module(0, factors);
        auto l = enumerate_submodules(m);
        for (int i = 0; i < l.size(); ++i) {
            const Submodule& n = l.nodes[static_cast<size_t>(i)];
            bool fast = !n.is_zero() && is_prime_number(n.exponent());
            EXPECT_EQ(static_cast<bool>(l.flag_second[static_cast<size_t>(i)]), fast);
        }
    }
}

TEST(Remark, ProperSubmodulesAreIntersectionsOfIrreducibles) {
    for (auto factors : std::vector<std::vector<i64>>{{12}, {8}, {2, 4}, {2, 2, 2}, {3, 9}, {2, 12}}) {
        FinModule m = make_module(0, factors);
        auto l = enumerate_submodules(m);
        for (int i = 0; i < l.size(); ++i) {
            if (i == l.full_index) continue;
            Submodule acc = full_submodule(m);
            for (int ci : l.ci_list)
                if (l.contained(i, ci)) acc = intersect(acc, l.nodes[static_cast<size_t>(ci)]);
            EXPECT_EQ(acc, l.nodes[static_cast<size_t>(i)]);
        }
    }
}

TEST(Covers, HasseEdgesAreMinimal) {
    FinModule m = make_module(0, {2, 4});
    auto l = enumerate_submodules(m);
    for (int i = 0; i < l.size(); ++i)
        for (int j : l.covers_above[static_cast<size_t>(i)]) {
            EXPECT_TRUE(l.contained(i, j));
            EXPECT_NE(i, j);
            for (int t = 0; t < l.size(); ++t)
                if (t != i && t != j)
                    EXPECT_FALSE(l.contained(i, t) && l.contained(t, j));
        }
}
