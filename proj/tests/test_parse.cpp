#include <gtest/gtest.h>

#include "secmod/parse.hpp"
#include "secmod/theorems.hpp"

using namespace secmod;

TEST(Parse, SpecValues) {
    FinModule a = parse_module_expr("Z6 + Z10");
    EXPECT_EQ(a.factors, (std::vector<i64>{2, 30}));
    EXPECT_EQ(a.ring, 30);

    FinModule b = parse_module_expr("Z2^3");
    EXPECT_EQ(b.factors, (std::vector<i64>{2, 2, 2}));
    EXPECT_EQ(b.ring, 2);

    EXPECT_THROW(parse_module_expr("Z0"), ParseError);
}

TEST(Parse, WhitespaceAndEdgeCases) {
    EXPECT_EQ(parse_module_expr("  Z4+Z6  "), parse_module_expr("Z4 + Z6"));
    EXPECT_EQ(parse_module_expr("Z1").order(), 1);
    EXPECT_TRUE(parse_module_expr("Z1 + Z1").is_zero_module());
    EXPECT_EQ(parse_module_expr("Z3 ^ 2").factors, (std::vector<i64>{3, 3}));
    EXPECT_EQ(parse_module_expr("Z5^0").order(), 1); // vanishing power
}

TEST(Parse, ErrorsCarryPositions) {
    try {
        parse_module_expr("Z6 + Q4");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 5u);
    }
    EXPECT_THROW(parse_module_expr(""), ParseError);
    EXPECT_THROW(parse_module_expr("Z6 +"), ParseError);
    EXPECT_THROW(parse_module_expr("Z6 Z4"), ParseError);
    EXPECT_THROW(parse_module_expr("Z"), ParseError);
}

TEST(Parse, RingOverride) {
    FinModule m = parse_module_expr("Z6", 12);
    EXPECT_EQ(m.ring, 12);
    EXPECT_THROW(parse_module_expr("Z6", 8), std::invalid_argument);
}

TEST(Parse, PrintRoundTrip) {
    CorpusSpec spec{30, CorpusFilter::all, {}};
    for (const auto& m : corpus_generate(spec)) {
        FinModule back = parse_module_expr(print_module_expr(m));
        EXPECT_EQ(back, m) << print_module_expr(m);
    }
}
