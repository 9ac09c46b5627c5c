#include <gtest/gtest.h>

#include "secmod/classify.hpp"
#include "secmod/parse.hpp"

using namespace secmod;

namespace {
Submodule cyc(const FinModule& m, Element e) { return span(m, {std::move(e)}); }
} // namespace

TEST(Second, SpecValues) {
    FinModule z6 = make_module(0, {6});
    EXPECT_TRUE(is_second(cyc(z6, {2})));
    EXPECT_FALSE(is_second(zero_submodule(z6)));

    FinModule z8 = make_module(0, {8});
    EXPECT_FALSE(is_second(cyc(z8, {2}))); // 2N = {0,4} is neither N nor 0
}

TEST(Secondary, SpecValues) {
    FinModule z8 = make_module(0, {8});
    EXPECT_TRUE(is_secondary(full_submodule(z8)));
    FinModule z6 = make_module(0, {6});
    EXPECT_FALSE(is_secondary(full_submodule(z6)));
    // second implies secondary
    EXPECT_TRUE(is_secondary(cyc(z6, {2})));
}

TEST(SecondSecondary, FastModesAgree) {
    for (auto factors : std::vector<std::vector<i64>>{{12}, {8}, {2, 4}, {2, 2, 2}, {3, 9}, {2, 12}, {6, 10}}) {
        FinModule m = make_module(0, factors);
        auto l = enumerate_submodules(m);
        for (const auto& n : l.nodes) {
            EXPECT_EQ(is_second(n), is_second_fast(n));
            EXPECT_EQ(is_secondary(n), is_secondary_fast(n));
        }
    }
}

TEST(TwoAbsorbingSecond, SpecValues) {
    FinModule z8 = make_module(0, {8});
    auto l8 = enumerate_submodules(z8);
    EXPECT_FALSE(is_2_absorbing_second(l8, full_submodule(z8))); // a=b=2 against L={0,4}
    EXPECT_FALSE(is_2_absorbing_second(l8, zero_submodule(z8)));

    // second submodules are 2-absorbing second
    for (auto factors : std::vector<std::vector<i64>>{{12}, {2, 4}, {2, 2, 3}}) {
        FinModule m = make_module(0, factors);
        auto l = enumerate_submodules(m);
        for (const auto& n : l.nodes)
            if (is_second(n)) EXPECT_TRUE(is_2_absorbing_second(l, n));
    }
}

TEST(StronglyTwoAbsorbingSecond, ModesAgree) {
    for (auto factors : std::vector<std::vector<i64>>{{12}, {8}, {2, 4}, {2, 2, 2}, {3, 9}, {6, 10}}) {
        FinModule m = make_module(0, factors);
        auto l = enumerate_submodules(m);
        for (const auto& n : l.nodes) EXPECT_TRUE(strongly_second_modes_agree(l, n));
    }
}

TEST(StronglyTwoAbsorbingSecondary, SpecValues) {
    FinModule z6 = make_module(0, {6});
    EXPECT_TRUE(is_strongly_2_absorbing_secondary(full_submodule(z6)));

    FinModule z10 = make_module(0, {10});
    EXPECT_TRUE(is_strongly_2_absorbing_secondary(full_submodule(z10)));

    FinModule m = make_module(0, {6, 10});
    EXPECT_FALSE(is_strongly_2_absorbing_secondary(full_submodule(m)));

    FinModule z12 = make_module(0, {12});
    EXPECT_TRUE(is_strongly_2_absorbing_secondary(full_submodule(z12)));

    FinModule z8 = make_module(0, {8});
    EXPECT_TRUE(is_strongly_2_absorbing_secondary(cyc(z8, {2})));

    EXPECT_FALSE(is_strongly_2_absorbing_secondary(zero_submodule(z12)));
}

TEST(StronglyTwoAbsorbingSecondary, ThreeModesAgree) {
    for (auto factors : std::vector<std::vector<i64>>{{12}, {8}, {16}, {2, 4}, {2, 2, 2}, {3, 9}, {6, 10}, {2, 12}}) {
        FinModule m = make_module(0, factors);
        auto l = enumerate_submodules(m);
        for (int i = 0; i < l.size(); ++i) {
            auto modes = strongly_2_absorbing_secondary_modes(l, i);
            EXPECT_TRUE(modes.agree()) << print_module_expr(m) << " node " << i;
            EXPECT_EQ(modes.scalar_formula,
                      is_strongly_2_absorbing_secondary(l.nodes[static_cast<size_t>(i)]));
        }
    }
}

TEST(TwoAbsorbingSecondary, SpecValues) {
    FinModule z12 = make_module(0, {12});
    auto l = enumerate_submodules(z12);
    EXPECT_TRUE(is_2_absorbing_secondary(l, full_submodule(z12)));
    EXPECT_FALSE(is_2_absorbing_secondary(l, zero_submodule(z12)));

    // strongly 2-absorbing secondary implies 2-absorbing secondary
    for (auto factors : std::vector<std::vector<i64>>{{12}, {2, 4}, {6, 10}, {2, 2, 3}}) {
        FinModule m = make_module(0, factors);
        auto lm = enumerate_submodules(m);
        for (const auto& n : lm.nodes)
            if (is_strongly_2_absorbing_secondary(n))
                EXPECT_TRUE(is_2_absorbing_secondary(lm, n));
    }
}

TEST(TwoAbsorbingSubmodule, SpecValues) {
    FinModule z12 = make_module(0, {12});
    EXPECT_TRUE(is_2_absorbing_submodule(cyc(z12, {6})));
    EXPECT_THROW(is_2_absorbing_submodule(full_submodule(z12)), std::invalid_argument);

    // prime submodules are 2-absorbing
    auto l = enumerate_submodules(z12);
    for (const auto& p : prime_submodules(l)) EXPECT_TRUE(is_2_absorbing_submodule(p));
}

TEST(TwoAbsorbingPrimarySubmodule, SpecValues) {
    FinModule z12 = make_module(0, {12});
    auto l = enumerate_submodules(z12);
    EXPECT_TRUE(is_2_absorbing_primary_submodule(l, cyc(z12, {4})));
    EXPECT_THROW(is_2_absorbing_primary_submodule(l, full_submodule(z12)), std::invalid_argument);

    // any 2-absorbing submodule is 2-absorbing primary
    for (auto factors : std::vector<std::vector<i64>>{{12}, {2, 4}, {2, 2, 3}, {3, 9}}) {
        FinModule m = make_module(0, factors);
        auto lm = enumerate_submodules(m);
        for (int i = 0; i < lm.size(); ++i) {
            if (i == lm.full_index) continue;
            const Submodule& n = lm.nodes[static_cast<size_t>(i)];
            if (is_2_absorbing_submodule(n))
                EXPECT_TRUE(is_2_absorbing_primary_submodule(lm, n));
        }
    }
}

TEST(Comultiplication, SpecValues) {
    auto l8 = enumerate_submodules(make_module(0, {8}));
    EXPECT_TRUE(is_comultiplication(l8));

    auto lk = enumerate_submodules(make_module(0, {2, 2}));
    EXPECT_FALSE(is_comultiplication(lk));

    auto l6 = enumerate_submodules(make_module(0, {6}));
    EXPECT_TRUE(is_comultiplication(l6));

    for (auto factors : std::vector<std::vector<i64>>{{8}, {2, 2}, {6}, {12}, {2, 4}, {6, 10}, {3, 9}}) {
        FinModule m = make_module(0, factors);
        EXPECT_EQ(is_comultiplication(enumerate_submodules(m)), is_comultiplication_fast(m))
            << print_module_expr(m);
    }
}

TEST(Cocyclic, SpecValues) {
    EXPECT_TRUE(is_cocyclic(make_module(0, {8})));
    EXPECT_FALSE(is_cocyclic(make_module(0, {6})));
    EXPECT_FALSE(is_cocyclic(make_module(0, {})));
    EXPECT_FALSE(is_cocyclic(make_module(0, {2, 2})));
    EXPECT_TRUE(is_cocyclic(make_module(0, {49})));
}

TEST(SecondaryRepresentation, SpecValues) {
    FinModule z6 = make_module(0, {6});
    auto parts = secondary_representation(full_submodule(z6));
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0], cyc(z6, {3})); // 2-part {0,3}
    EXPECT_EQ(parts[1], cyc(z6, {2})); // 3-part {0,2,4}

    FinModule z8 = make_module(0, {8});
    auto parts8 = secondary_representation(full_submodule(z8));
    ASSERT_EQ(parts8.size(), 1u);
    EXPECT_EQ(parts8[0], full_submodule(z8));

    FinModule z12 = make_module(0, {12});
    auto parts6 = secondary_representation(cyc(z12, {6}));
    ASSERT_EQ(parts6.size(), 1u);
    EXPECT_EQ(parts6[0], cyc(z12, {6}));

    EXPECT_THROW(secondary_representation(zero_submodule(z6)), std::invalid_argument);

    // sum of parts reproduces N and each part is secondary
    for (auto factors : std::vector<std::vector<i64>>{{12}, {2, 12}, {6, 10}, {2, 2, 3}}) {
        FinModule m = make_module(0, factors);
        auto l = enumerate_submodules(m);
        for (const auto& n : l.nodes) {
            if (n.is_zero()) continue;
            Submodule acc = zero_submodule(m);
            for (const auto& part : secondary_representation(n)) {
                EXPECT_TRUE(is_secondary(part));
                acc = sum(acc, part);
            }
            EXPECT_EQ(acc, n);
        }
    }
}

TEST(SecondRadicalSubmodule, SpecValues) {
    FinModule z6 = make_module(0, {6});
    EXPECT_TRUE(is_second_radical_submodule(full_submodule(z6)));
    FinModule z8 = make_module(0, {8});
    EXPECT_FALSE(is_second_radical_submodule(cyc(z8, {2})));
    EXPECT_FALSE(is_second_radical_submodule(zero_submodule(z8)));
}

TEST(ClassifyAll, Z12Report) {
    auto rep = classify_all(make_module(0, {12}));
    EXPECT_EQ(rep.lattice.size(), 6);
    EXPECT_TRUE(rep.comultiplication);
    EXPECT_FALSE(rep.cocyclic);
    const auto& m_row = rep.rows[static_cast<size_t>(rep.lattice.full_index)];
    EXPECT_TRUE(m_row.strongly_two_abs_secondary);
    EXPECT_FALSE(m_row.second);
    EXPECT_FALSE(m_row.prime); // proper-only classes are reported false on M
}

TEST(ClassifyAll, PaperSeparationModule) {
    auto rep = classify_all(make_module(0, {6, 10}));
    const auto& m_row = rep.rows[static_cast<size_t>(rep.lattice.full_index)];
    EXPECT_FALSE(m_row.strongly_two_abs_secondary);
    EXPECT_FALSE(m_row.strongly_two_abs_second);
    EXPECT_FALSE(rep.comultiplication);
}

TEST(ClassifyAll, ZeroModule) {
    auto rep = classify_all(make_module(0, {}));
    ASSERT_EQ(rep.rows.size(), 1u);
    const auto& row = rep.rows[0];
    EXPECT_FALSE(row.second || row.secondary || row.second_radical_submodule ||
                 row.two_abs_second || row.strongly_two_abs_second || row.two_abs_secondary ||
                 row.strongly_two_abs_secondary || row.two_abs_submodule ||
                 row.two_abs_primary_submodule || row.prime || row.completely_irreducible ||
                 row.minimal);
    EXPECT_FALSE(rep.cocyclic);
}

TEST(ClassifyAll, WorkerCountDoesNotChangeResults) {
    FinModule m = make_module(0, {2, 2, 4});
    auto a = classify_all(m, 1);
    auto b = classify_all(m, 4);
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        EXPECT_EQ(a.rows[i].second, b.rows[i].second);
        EXPECT_EQ(a.rows[i].strongly_two_abs_secondary, b.rows[i].strongly_two_abs_secondary);
        EXPECT_EQ(a.rows[i].two_abs_primary_submodule, b.rows[i].two_abs_primary_submodule);
        EXPECT_EQ(a.rows[i].prime, b.rows[i].prime);
    }
}
