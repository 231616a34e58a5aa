#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "pslab/counting.hpp"
#include "pslab/witness.hpp"

using namespace pslab;

TEST(FindRepresentation, SmallExamples) {
    const auto r = find_representation(2, {6, 5}, {6, 5});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->n1, 1u);
    EXPECT_EQ(r->n2, 1u);
    EXPECT_TRUE(r->verified);

    const auto t = find_representation(10, {3, 2}, {3, 2});
    ASSERT_TRUE(t.has_value());
    EXPECT_TRUE(t->verified);
    const bool known = (t->n1 == 2 && t->n2 == 4) || (t->n1 == 4 && t->n2 == 2) || (t->n1 == 3 && t->n2 == 3);
    EXPECT_TRUE(known) << t->n1 << " " << t->n2;
    EXPECT_THROW(find_representation(1, {3, 2}, {3, 2}), DomainError);
}

TEST(FindRepresentation, NotFoundWhereTheCountIsZero) {
    const RationalExponent a{19, 10};
    std::size_t zeros = 0;
    for (std::uint64_t N = 2; N <= 500; ++N) {
        const bool none = count_R_bruteforce(N, a, a) == 0;
        const auto r = find_representation(N, a, a);
        EXPECT_EQ(r.has_value(), !none) << N;
        if (none) ++zeros;
    }
    EXPECT_GT(zeros, 0u);
}

TEST(Enumerate, Examples) {
    const auto reps = enumerate_representations(10, {3, 2}, {3, 2});
    ASSERT_EQ(reps.size(), 3u);
    EXPECT_EQ(reps[0].n1, 2u);
    EXPECT_EQ(reps[0].n2, 4u);
    EXPECT_EQ(reps[1].n1, 3u);
    EXPECT_EQ(reps[1].n2, 3u);
    EXPECT_EQ(reps[2].n1, 4u);
    EXPECT_EQ(reps[2].n2, 2u);
    for (const auto& r : reps) EXPECT_TRUE(r.verified);
    const auto two = enumerate_representations(2, {7, 4}, {7, 4});
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0].n1, 1u);
}

TEST(Enumerate, LengthEqualsCount) {
    for (const auto& [a1, a2] : std::vector<std::pair<RationalExponent, RationalExponent>>{
             {{6, 5}, {6, 5}}, {{6, 5}, {13, 10}}, {{3, 2}, {7, 4}}}) {
        for (std::uint64_t N = 2; N <= 800; N += 3) {
            const auto reps = enumerate_representations(N, a1, a2);
            ASSERT_EQ(reps.size(), count_R(N, a1, a2).count) << N;
            for (std::size_t i = 0; i < reps.size(); ++i) {
                ASSERT_TRUE(reps[i].verified);
                if (i > 0) { ASSERT_LT(reps[i - 1].n1, reps[i].n1); }
            }
        }
    }
}

TEST(LemmaScan, AcceptedCandidatesAlwaysCertify) {
    const RationalExponent a1{6, 5}, a2{13, 10};
    std::size_t total = 0;
    for (std::uint64_t N = 2000; N <= 12000; N += 37) {
        for (const auto& c : lemma_candidates(N, a1, a2)) {
            ++total;
            EXPECT_TRUE(c.certified) << N << " " << c.n1;
        }
    }
    EXPECT_GT(total, 100u);
}

TEST(LemmaScan, DoublePrecisionAndFiftyDigitConditionsAgree) {
    const RationalExponent a1{6, 5}, a2{13, 10};
    for (std::uint64_t N = 5000; N <= 5100; ++N) {
        const double lo = std::ceil(std::pow(N / 2.0, 1 / 1.2));
        const double hi = std::floor(std::pow(0.75 * N, 1 / 1.2));
        for (auto n1 = static_cast<std::uint64_t>(lo); n1 <= static_cast<std::uint64_t>(hi); ++n1) {
            const auto d = detail::lemma_conditions_double(N, n1, a1, a2);
            if (d.borderline) continue;
            const auto p = detail::lemma_conditions_precise(N, n1, a1, a2);
            ASSERT_EQ(d.accept, p.accept) << N << " " << n1;
            if (d.accept) { ASSERT_EQ(d.n2, p.n2); }
        }
    }
}

TEST(FindRepresentation, TheoremRangeSucceedsEverywhere) {
    const RationalExponent a1{6, 5}, a2{13, 10};
    std::size_t via_lemma = 0;
    for (std::uint64_t N = 5000; N <= 5100; ++N) {
        const auto r = find_representation(N, a1, a2);
        ASSERT_TRUE(r.has_value()) << N;
        ASSERT_TRUE(r->verified);
        ASSERT_TRUE(certify_representation(N, r->n1, r->n2, a1, a2));
        if (r->via_lemma) ++via_lemma;
    }
    EXPECT_GE(via_lemma, 91u);
}

TEST(Certify, RejectsWrongPairs) {
    EXPECT_TRUE(certify_representation(10, 2, 4, {3, 2}, {3, 2}));
    EXPECT_FALSE(certify_representation(10, 2, 3, {3, 2}, {3, 2}));
    EXPECT_FALSE(certify_representation(10, 0, 3, {3, 2}, {3, 2}));
    EXPECT_FALSE(certify_representation(10, 5, 1, {3, 2}, {3, 2}));
}
