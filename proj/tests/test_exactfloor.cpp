#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "pslab/exactfloor.hpp"

using namespace pslab;

namespace {

const std::vector<RationalExponent> kAlphas{{11, 10}, {6, 5}, {5, 4}, {4, 3}, {3, 2}, {13, 10},
                                            {19, 10}, {2, 1}, {21, 10}, {123, 100}, {7, 3}, {5, 2}};

mpz_class mpz_root_oracle(const mpz_class& x, unsigned long r) {
    mpz_class y;
    mpz_root(y.get_mpz_t(), x.get_mpz_t(), r);
    return y;
}

// floor(n^(p/q)) in 60-digit arithmetic; nullopt when the value is too close
// to an integer for the precision to decide.
std::optional<std::uint64_t> floor_pow_highprec(std::uint64_t n, RationalExponent a) {
    using real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;
    const real v = pow(real(n), real(a.p) / real(a.q));
    const real f = floor(v);
    if (v - f < real(1e-40) || f + 1 - v < real(1e-40)) return std::nullopt;
    return f.convert_to<std::uint64_t>();
}

}  // namespace

TEST(ParseAlpha, Examples) {
    EXPECT_EQ(parse_alpha("1.5"), (RationalExponent{3, 2}));
    EXPECT_EQ(parse_alpha("1.23"), (RationalExponent{123, 100}));
    EXPECT_EQ(parse_alpha("2.50"), (RationalExponent{5, 2}));
    EXPECT_EQ(parse_alpha("2"), (RationalExponent{2, 1}));
    EXPECT_EQ(parse_alpha("1.15"), (RationalExponent{23, 20}));
    EXPECT_THROW(parse_alpha("1.0"), AlphaNotGreaterThanOne);
    EXPECT_THROW(parse_alpha("0.5"), AlphaNotGreaterThanOne);
    EXPECT_THROW(parse_alpha("1"), AlphaNotGreaterThanOne);
}

TEST(ParseAlpha, RejectsMalformed) {
    for (const char* bad : {"", ".", "1.", ".5", "-1.5", "+1.5", "1e3", "1.5x", "1,5", " 1.5", "1..5",
                            "1.2345678901234567890"}) {
        EXPECT_THROW(parse_alpha(bad), MalformedDecimal) << bad;
    }
}

TEST(NthRootFloor, Examples) {
    EXPECT_EQ(nth_root_floor(std::uint64_t{8}, 3), 2u);
    EXPECT_EQ(nth_root_floor(std::uint64_t{26}, 3), 2u);
    EXPECT_EQ(nth_root_floor(std::uint64_t{1000000}, 5), 15u);
    EXPECT_EQ(nth_root_floor(std::uint64_t{0}, 4), 0u);
    EXPECT_EQ(nth_root_floor(std::uint64_t{1}, 4), 1u);
    EXPECT_EQ(nth_root_floor(std::uint64_t{12345}, 1), 12345u);
}

TEST(NthRootFloor, MatchesGmpRootOnPerfectPowersAndNeighbours) {
    for (unsigned r = 2; r <= 13; ++r) {
        for (unsigned long base : {2ul, 3ul, 10ul, 999ul, 65535ul, 4294967291ul}) {
            mpz_class p;
            mpz_pow_ui(p.get_mpz_t(), mpz_class(base).get_mpz_t(), r);
            for (int d = -1; d <= 1; ++d) {
                const mpz_class x = p + d;
                EXPECT_EQ(nth_root_floor(x, r), mpz_root_oracle(x, r)) << base << "^" << r << "+" << d;
            }
        }
    }
}

TEST(NthRootFloor, MatchesGmpRootOnRandomBigIntegers) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20241016);
    std::mt19937 mt(7);
    for (int i = 0; i < 3000; ++i) {
        const mpz_class x = rng.get_z_bits(1 + mt() % 900);
        const unsigned r = 1 + mt() % 40;
        EXPECT_EQ(nth_root_floor(x, r), mpz_root_oracle(x, r));
    }
}

TEST(FloorPow, Examples) {
    EXPECT_EQ(floor_pow(2, {3, 2}), 2u);
    EXPECT_EQ(floor_pow(4, {3, 2}), 8u);
    EXPECT_EQ(floor_pow(10, {6, 5}), 15u);
    EXPECT_EQ(floor_pow(9, {3, 2}), 27u);
    EXPECT_EQ(floor_pow(1, {7, 3}), 1u);
    EXPECT_THROW(floor_pow(0, {3, 2}), DomainError);
}

TEST(FloorPow, FastPathAgreesWithBigIntegerPathOnMillionCases) {
    std::mt19937_64 rng(12345);
    std::size_t cases = 0;
    for (const auto& a : kAlphas) {
        for (std::uint64_t n = 1; n <= 50000; ++n, ++cases) ASSERT_EQ(floor_pow(n, a), floor_pow_exact(n, a)) << n;
    }
    while (cases < 1000000) {
        const auto& a = kAlphas[rng() % kAlphas.size()];
        const std::uint64_t n = 1 + rng() % 3000000;
        ASSERT_EQ(floor_pow(n, a), floor_pow_exact(n, a)) << n << " " << a.to_string();
        ++cases;
    }
}

TEST(FloorPow, AgreesWithHighPrecisionEvaluation) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 5000; ++i) {
        const auto& a = kAlphas[rng() % kAlphas.size()];
        // n^(5/2) stays below 2^64 for n <= 10^7
        const std::uint64_t n = 1 + rng() % 10000000;
        const auto hp = floor_pow_highprec(n, a);
        if (hp) {
            EXPECT_EQ(floor_pow(n, a), *hp) << n << " " << a.to_string();
        }
    }
}

TEST(FloorPow, BigVariantAndCap) {
    const mpz_class n("123456789012345678901234567890");
    const mpz_class v = floor_pow_big(n, {3, 2});
    mpz_class n3;
    mpz_pow_ui(n3.get_mpz_t(), n.get_mpz_t(), 3);
    EXPECT_LE(v * v, n3);
    EXPECT_GT((v + 1) * (v + 1), n3);
    EXPECT_THROW(floor_pow_big(n, {3, 2}, 200), OverflowError);
    EXPECT_EQ(floor_pow_big(mpz_class(10), {6, 5}), 15);
}

TEST(PsMembership, Examples) {
    const auto two = is_ps_member(2, {3, 2});
    EXPECT_TRUE(two.member);
    EXPECT_EQ(two.witness, 2u);
    const auto three = is_ps_member(3, {3, 2});
    EXPECT_FALSE(three.member);
    EXPECT_FALSE(three.witness.has_value());
    EXPECT_TRUE(is_ps_member(8, {3, 2}).member);
    EXPECT_EQ(is_ps_member(8, {3, 2}).witness, 4u);
}

TEST(PsMembership, RoundTripAndStrictGrowth) {
    for (const auto& a : kAlphas) {
        std::uint64_t prev = 0;
        for (std::uint64_t n = 1; n <= 10000; ++n) {
            const std::uint64_t v = floor_pow(n, a);
            ASSERT_GT(v, prev);
            prev = v;
            const auto m = is_ps_member(v, a);
            ASSERT_TRUE(m.member);
            ASSERT_EQ(*m.witness, n);
        }
    }
}

TEST(PsMembership, MatchesEnumeratedSetAndExactPath) {
    for (const auto& a : kAlphas) {
        std::set<std::uint64_t> values;
        for (std::uint64_t n = 1;; ++n) {
            const auto v = floor_pow_exact(n, a);
            if (v > 20000) break;
            values.insert(v);
        }
        for (std::uint64_t k = 1; k <= 20000; ++k) {
            const auto fast = is_ps_member(k, a);
            const auto slow = is_ps_member_exact(k, a);
            ASSERT_EQ(fast.member, values.count(k) == 1) << k << " " << a.to_string();
            ASSERT_EQ(fast.member, slow.member);
            ASSERT_EQ(fast.witness, slow.witness);
        }
    }
}

TEST(Phi, Values) {
    EXPECT_EQ(phi(1.0, 17.5), 1.0);
    EXPECT_EQ(phi(2.0, 0.0), 1.0);
    EXPECT_NEAR(phi(2.0, 3.0), 2.0 - std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(phi(RationalExponent{6, 5}, 1000.0), std::pow(1001.0, 5.0 / 6) - std::pow(1000.0, 5.0 / 6), 1e-12);
    EXPECT_THROW(phi(0.5, 1.0), DomainError);
    EXPECT_THROW(phi(2.0, -1.0), DomainError);
}

TEST(Phi, DecreasingAndBelowDerivativeBound) {
    for (double alpha : {1.1, 1.5, 2.0, 2.9}) {
        double prev = phi(alpha, 1.0);
        for (double x = 1.5; x < 1e7; x *= 1.5) {
            const double v = phi(alpha, x);
            EXPECT_LT(v, prev);
            EXPECT_GT(v, 0.0);
            EXPECT_LT(v, std::pow(x, 1.0 / alpha - 1.0) / alpha);
            prev = v;
        }
    }
}

TEST(FracCriterion, Examples) {
    EXPECT_TRUE(frac_criterion(2, 10, {3, 2}, {3, 2}));
    EXPECT_FALSE(frac_criterion(3, 10, {3, 2}, {3, 2}));
    for (std::uint64_t m = 1; m < 200; ++m) {
        const auto n = floor_pow(m, {6, 5});
        EXPECT_TRUE(frac_criterion(n, 2 * n, {6, 5}, {6, 5}));
    }
    EXPECT_THROW(frac_criterion(10, 10, {3, 2}, {3, 2}), DomainError);
}

TEST(FracCriterion, LiteralFractionalPartFormAgreesAwayFromThresholds) {
    const RationalExponent a1{6, 5}, a2{13, 10};
    const std::uint64_t N = 30000;
    std::size_t checked = 0;
    for (std::uint64_t n = 1; n < N; ++n) {
        const double x1 = static_cast<double>(n), x2 = static_cast<double>(N - n);
        const double m1 = std::abs(frac(-std::pow(x1, a1.inverse())) - phi(a1, x1));
        const double m2 = std::abs(frac(-std::pow(x2, a2.inverse())) - phi(a2, x2));
        // {-y} jumps between 0 and 1 at integer y, a second threshold
        const bool near_jump = dist_to_int(std::pow(x1, a1.inverse())) < 1e-9 ||
                               dist_to_int(std::pow(x2, a2.inverse())) < 1e-9;
        if (m1 < 1e-9 || m2 < 1e-9 || near_jump) continue;
        ++checked;
        ASSERT_EQ(frac_criterion(n, N, a1, a2), frac_criterion_float(n, N, a1, a2)) << n;
    }
    EXPECT_GT(checked, N - 100);
}

TEST(FracUtilities, Basics) {
    EXPECT_DOUBLE_EQ(frac(2.25), 0.25);
    EXPECT_DOUBLE_EQ(frac(-0.25), 0.75);
    EXPECT_DOUBLE_EQ(dist_to_int(2.75), 0.25);
    EXPECT_NEAR(dist_to_int(-3.1), 0.1, 1e-12);
}
