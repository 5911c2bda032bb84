#include <gtest/gtest.h>

#include <random>
#include <string>

#include "kcme/io.hpp"
#include "kcme/model.hpp"
#include "test_support.hpp"

using namespace kcme;

TEST(ParseInstance, ReadsHeaderAndRows) {
    const auto inst = parse_instance("2 1\n2 3\n01?\n?10\n");
    EXPECT_EQ(inst.k(), 2U);
    EXPECT_EQ(inst.d(), 1U);
    EXPECT_EQ(inst.n(), 2U);
    EXPECT_EQ(inst.m(), 3U);
    EXPECT_EQ(inst.row(0).to_string(), "01?");
    EXPECT_EQ(inst.row(1).to_string(), "?10");
    EXPECT_EQ(inst.cell(0, 2), Symbol::Missing);
    EXPECT_EQ(inst.cell(1, 2), Symbol::Zero);
}

TEST(ParseInstance, SingleMissingCell) {
    const auto inst = parse_instance("1 0\n1 1\n?\n");
    EXPECT_EQ(inst.n(), 1U);
    EXPECT_EQ(inst.m(), 1U);
    EXPECT_EQ(inst.cell(0, 0), Symbol::Missing);
    EXPECT_EQ(inst.present_count(), 0U);
}

TEST(ParseInstance, IllegalCharacterReportsLine) {
    try {
        parse_instance("1 0\n1 2\n0x\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3U);
    }
}

TEST(ParseInstance, CommentsAreSkippedAndLineNumbersStayPhysical) {
    const auto inst = parse_instance("# header\n1 0\n# dims\n2 2\n01\n# mid\n1?\n");
    EXPECT_EQ(inst.n(), 2U);
    try {
        parse_instance("# c\n1 0\n1 2\n# c\n012\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 5U);
    }
}

TEST(ParseInstance, ErrorPaths) {
    const auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_instance(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("1\n1 1\n0\n"), 1U);           // header with one field
    EXPECT_EQ(line_of("a b\n1 1\n0\n"), 1U);         // non-numeric header
    EXPECT_EQ(line_of("1 0\n2 2\n01\n"), 4U);        // too few rows
    EXPECT_EQ(line_of("1 0\n1 2\n01\n10\n"), 4U);    // too many rows
    EXPECT_EQ(line_of("1 0\n1 3\n01\n"), 3U);        // short row
    EXPECT_EQ(line_of("0 0\n1 1\n0\n"), 1U);         // k = 0
    EXPECT_EQ(line_of("1 -1\n1 1\n0\n"), 1U);        // negative d
    EXPECT_EQ(line_of("1 0\n0 1\n"), 2U);            // n = 0
}

TEST(ParseInstance, CarriageReturnsTolerated) {
    const auto inst = parse_instance("1 0\r\n1 2\r\n0?\r\n");
    EXPECT_EQ(inst.row(0).to_string(), "0?");
}

TEST(Serialize, NormalisesCommentsAway) {
    const auto inst = parse_instance("# c\n2 1\n\n2 3\n01?\n?10\n");
    EXPECT_EQ(serialize_instance(inst), "2 1\n2 3\n01?\n?10\n");
}

TEST(Serialize, RoundTripProperty) {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        const auto n = 1 + rng() % 8;
        const auto m = 1 + rng() % 90;
        const auto inst = support::random_instance(rng, n, m, 1 + rng() % 4, rng() % 5, 0.3);
        const auto text = serialize_instance(inst);
        EXPECT_EQ(serialize_instance(parse_instance(text)), text);
    }
}

TEST(HammingRestricted, Examples) {
    const auto all3 = BitVector(3, true);
    EXPECT_EQ(hamming_restricted(PartialString::from_string("01?"), BitVector::from_string("011"), all3), 0U);
    EXPECT_EQ(hamming_restricted(PartialString::from_string("10?"), BitVector::from_string("011"), all3), 2U);
    EXPECT_EQ(hamming_restricted(PartialString::from_string("1?0"), BitVector::from_string("111"),
                                 BitVector::from_string("101")),
              1U);
}

TEST(HammingRestricted, DecompositionAndUpperBound) {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 300; ++it) {
        const std::size_t m = 1 + rng() % 150;
        const auto row = PartialString::from_string(support::random_partial(rng, m, 0.4));
        const auto center = support::random_bits(rng, m);
        const auto part = support::random_bits(rng, m);
        const auto full = hamming_restricted(row, center);
        EXPECT_EQ(full, hamming_restricted(row, center, part) + hamming_restricted(row, center, ~part));
        EXPECT_LE(full, row.present_count());
        EXPECT_EQ(full, support::full_distance(row, center));
    }
}

TEST(Mask, DerivedFromMissingCells) {
    std::mt19937_64 rng(3);
    const auto inst = support::random_instance(rng, 7, 70, 2, 1, 0.5);
    const auto mask = inst.mask();
    for (std::size_t i = 0; i < inst.n(); ++i) {
        for (std::size_t j = 0; j < inst.m(); ++j) {
            EXPECT_EQ(mask.at(i, j), inst.cell(i, j) != Symbol::Missing);
        }
    }
}

TEST(VerifySolution, Examples) {
    const auto two = Instance::from_rows(2, 0, {"10", "01"});
    Solution ok{{BitVector::from_string("10"), BitVector::from_string("01")}, {0, 1}};
    EXPECT_TRUE(verify_solution(two, ok).ok());

    const auto one = Instance::from_rows(1, 0, {"11"});
    Solution bad{{BitVector::from_string("00")}, {0}};
    const auto verdict = verify_solution(one, bad);
    ASSERT_EQ(verdict.violations.size(), 1U);
    EXPECT_EQ(verdict.violations[0], (Violation{0, 2}));

    const auto missing = Instance::from_rows(2, 0, {"???", "???", "???"});
    Solution any{{BitVector::from_string("101"), BitVector::from_string("010")}, {1, 0, 1}};
    EXPECT_TRUE(verify_solution(missing, any).ok());
}

TEST(VerifySolution, StructuralErrorsAreDistinct) {
    const auto inst = Instance::from_rows(2, 0, {"10", "01"});
    EXPECT_THROW(verify_solution(inst, Solution{{BitVector::from_string("10")}, {0, 0}}), StructuralError);
    EXPECT_THROW(verify_solution(inst, Solution{{BitVector::from_string("10"), BitVector::from_string("011")}, {0, 1}}),
                 StructuralError);
    EXPECT_THROW(verify_solution(inst, Solution{{BitVector::from_string("10"), BitVector::from_string("01")}, {0, 2}}),
                 StructuralError);
    EXPECT_THROW(verify_solution(inst, Solution{{BitVector::from_string("10"), BitVector::from_string("01")}, {0}}),
                 StructuralError);
}

TEST(SolutionFile, RoundTripAndOneBasedIndices) {
    Solution sol{{BitVector::from_string("101"), BitVector::from_string("000")}, {1, 0, 1}};
    const auto text = serialize_solution(sol);
    EXPECT_EQ(text, "101\n000\n2 1 2\n");
    const auto back = parse_solution(text);
    EXPECT_EQ(back.centers, sol.centers);
    EXPECT_EQ(back.assignment, sol.assignment);
    EXPECT_THROW(parse_solution("101\n0 1\n"), ParseError);
    EXPECT_THROW(parse_solution("1a1\n1\n"), ParseError);
}
