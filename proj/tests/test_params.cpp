#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "pslab/params.hpp"

using namespace pslab;

namespace {

// Uniform point of {x in (1/2,1)^2 : x1 + x2 > 3/2} kept 1e-6 away from the boundary.
std::pair<double, double> sample_region(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.5 + 1e-6, 1.0 - 1e-6);
    while (true) {
        const double x1 = u(rng), x2 = u(rng);
        if (x1 + x2 > 1.5 + 1e-6) return {x1, x2};
    }
}

}  // namespace

TEST(Lemma01, Examples) {
    const auto s = verify_lemma01(0.8, 0.8);
    ASSERT_EQ(s.size(), 4u);
    EXPECT_NEAR(s[0].value, 0.64, 1e-14);
    for (const auto& v : verify_lemma01(0.76, 0.76)) EXPECT_GT(v.value, 0.0) << v.name;
    EXPECT_THROW(verify_lemma01(0.7, 0.7), DomainError);
    EXPECT_THROW(verify_lemma01(1.0, 0.9), DomainError);
}

TEST(Betas, Examples) {
    const auto w = feasible_betas(0.8, 0.8);
    EXPECT_NEAR(w.lower1, 0.0, 1e-14);
    EXPECT_NEAR(w.upper1, 0.4, 1e-14);
    EXPECT_NEAR(w.beta1, 0.2, 1e-14);
    EXPECT_NEAR(w.beta2, 0.2, 1e-14);
    EXPECT_NEAR(w.X1 + w.X2, 1.0, 1e-14);
    const auto asym = feasible_betas(0.9, 0.7);
    const auto swapped = feasible_betas(0.7, 0.9);
    EXPECT_NEAR(asym.beta1, swapped.beta2, 1e-14);
    EXPECT_NEAR(asym.beta2, swapped.beta1, 1e-14);
}

TEST(Gamma0, Example) {
    const auto g = feasible_gamma0(0.8, 0.8, 0.2, 0.2);
    EXPECT_NEAR(g.lower, 0.4, 1e-14);
    EXPECT_NEAR(g.upper, 1.0, 1e-14);
    EXPECT_NEAR(g.gamma_hat0, 0.7, 1e-14);
    ASSERT_EQ(g.slacks.size(), 10u);
    for (const auto& s : g.slacks) EXPECT_GT(s.value, 0.0) << s.name;
    EXPECT_NEAR(g.slacks[0].value, 0.2 - 0.14, 1e-14);
}

TEST(Gamma0, BoundaryProbeShrinksBetaWindowKeepsGammaNonempty) {
    // on x1 = x2 -> 3/4 the beta window closes like the distance to the
    // boundary, while the gamma_hat0 window (with midpoint betas) stays open
    double prev_beta_width = 1.0;
    for (double eps : {0.1, 0.01, 0.001, 1e-4, 1e-5}) {
        const double x = 0.75 + eps;
        const auto b = feasible_betas(x, x);
        const double beta_width = b.upper1 - b.lower1;
        EXPECT_GT(beta_width, 0.0);
        EXPECT_LT(beta_width, prev_beta_width);
        EXPECT_LE(beta_width, 10.0 * eps);
        prev_beta_width = beta_width;
        const auto g = feasible_gamma0(x, x, b.beta1, b.beta2);
        EXPECT_GT(g.upper - g.lower, 0.0);
        EXPECT_GT(g.lower, 2.0 - 2.0 * x - 1e-15);
    }
}

TEST(Params, RandomSweep) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const auto [x1, x2] = sample_region(rng);
        for (const auto& s : verify_lemma01(x1, x2)) ASSERT_GT(s.value, 0.0) << s.name << " " << x1 << " " << x2;
        const auto b = feasible_betas(x1, x2);
        ASSERT_LT(b.lower1, b.upper1);
        ASSERT_LT(b.lower2, b.upper2);
        const auto g = feasible_gamma0(x1, x2, b.beta1, b.beta2);
        for (const auto& s : g.slacks) ASSERT_GT(s.value, 0.0) << s.name;
    }
}

TEST(Params, ImpliedInequalities) {
    // 5 follows from 1-3 and 10 from 6-8; check over the sweep and over the
    // whole gamma interval, not just its midpoint
    std::mt19937_64 rng(77);
    for (int i = 0; i < 500; ++i) {
        const auto [x1, x2] = sample_region(rng);
        const auto b = feasible_betas(x1, x2);
        const auto g = feasible_gamma0(x1, x2, b.beta1, b.beta2);
        const auto c = gamma0_constraints(x1, x2, b.beta1, b.beta2);
        for (double t = 0.05; t < 1.0; t += 0.1) {
            const double gam = g.lower + t * (g.upper - g.lower);
            if (c[0].slack(gam) > 0 && c[1].slack(gam) > 0 && c[2].slack(gam) > 0) { EXPECT_GT(c[4].slack(gam), 0.0); }
            if (c[5].slack(gam) > 0 && c[6].slack(gam) > 0 && c[7].slack(gam) > 0) { EXPECT_GT(c[9].slack(gam), 0.0); }
        }
    }
}

TEST(Params, ReducedFormAtLowerEndpoint) {
    std::mt19937_64 rng(5);
    const std::array<int, 8> index{0, 1, 2, 3, 5, 6, 7, 8};
    for (int i = 0; i < 300; ++i) {
        const auto [x1, x2] = sample_region(rng);
        const auto b = feasible_betas(x1, x2);
        const double d = 2.0 - x1 - x2;
        const auto c = gamma0_constraints(x1, x2, b.beta1, b.beta2);
        const auto reduced = reduced_slacks(x1, x2, b.beta1, b.beta2);
        for (std::size_t k = 0; k < index.size(); ++k) {
            const double full = c[index[k]].slack(d);
            EXPECT_NEAR(full, d * reduced[k], 1e-12) << k;
            EXPECT_GT(reduced[k], 0.0) << k;
        }
    }
}

TEST(Params, WitnessBundle) {
    const auto w = build_param_witness(0.82, 0.77);
    EXPECT_EQ(w.slacks.size(), 18u);
    for (const auto& s : w.slacks) EXPECT_GT(s.value, 0.0) << s.name;
    EXPECT_GT(w.gamma_hat0, 2.0 - 0.82 - 0.77);
    EXPECT_LT(w.gamma_hat0, 1.0);
    EXPECT_NEAR(w.X1 + w.X2, 1.0, 1e-14);
}
