#pragma once

/**
 * Closed-form constants of the additive problems over PS(alpha):
 *
 *   leading_constant_R(a1, a2) = G(1+1/a1) G(1+1/a2) / G(1/a1+1/a2)
 *   constant_N3(a)             = G(1+1/a)^2 / ((3-a) G(2/a))
 *   I(a)                       = a^-3 int_1^2 u^(3/a-2) int_{1-1/u}^{1/u} ((1-v)v)^(1/a-1) dv du
 *
 * and a brute-force Riemann oracle for the double integrals they come from.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pslab/error.hpp"
#include "pslab/exactfloor.hpp"
#include "pslab/parallel.hpp"
#include "pslab/specfun.hpp"
#include "pslab/summation.hpp"

namespace pslab {

struct ConstantBundle {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double value = 0.0;
    std::string formula_id;
};

struct LeadingConstantForms {
    double gamma_form = 0.0;  // G(1+1/a1) G(1+1/a2) / G(1/a1+1/a2)
    double beta_form = 0.0;   // a1^-1 a2^-1 B(1/a1, 1/a2)
};

inline LeadingConstantForms leading_constant_R_forms(double alpha1, double alpha2) {
    if (!(alpha1 >= 1.0) || !(alpha2 >= 1.0) || !std::isfinite(alpha1) || !std::isfinite(alpha2))
        throw DomainError("leading constant requires alpha1, alpha2 >= 1");
    const double r1 = 1.0 / alpha1;
    const double r2 = 1.0 / alpha2;
    return {specfun::gamma(1.0 + r1) * specfun::gamma(1.0 + r2) / specfun::gamma(r1 + r2),
            r1 * r2 * specfun::beta(r1, r2)};
}

inline constexpr double kDualFormTolerance = 1e-12;

/// Limit of R(N) / N^(1/a1+1/a2-1). Both closed forms are evaluated and must
/// agree to 1e-12 relative; the Gamma form is returned.
inline double leading_constant_R(double alpha1, double alpha2) {
    const auto forms = leading_constant_R_forms(alpha1, alpha2);
    if (std::abs(forms.gamma_form - forms.beta_form) > kDualFormTolerance * std::abs(forms.gamma_form))
        throw std::logic_error("Gamma and Beta forms of the leading constant disagree");
    return forms.gamma_form;
}

inline double leading_constant_R(RationalExponent a1, RationalExponent a2) {
    return leading_constant_R(a1.value(), a2.value());
}

inline void require_below_three(double alpha, const char* what) {
    if (!(alpha >= 1.0) || !(alpha < 3.0))
        throw DomainError(std::string(what) + " requires 1 <= alpha < 3, got " + std::to_string(alpha));
}

inline double constant_N3(double alpha) {
    require_below_three(alpha, "constant_N3");
    const double g = specfun::gamma(1.0 + 1.0 / alpha);
    return g * g / ((3.0 - alpha) * specfun::gamma(2.0 / alpha));
}

/// The inner v-integral is B(a,a) (I_{1/u}(a,a) - I_{1-1/u}(a,a)) with a = 1/alpha;
/// only the outer u-integral is done numerically.
inline double I_of_alpha(double alpha, double tol = 1e-12) {
    require_below_three(alpha, "I_of_alpha");
    const double a = 1.0 / alpha;
    const double full = specfun::beta(a, a);
    const double power = 3.0 / alpha - 2.0;
    auto outer = [&](double u) {
        const double upper = 1.0 / u;
        const double lower = 1.0 - upper;
        const double inner = full * (specfun::reg_inc_beta(upper, a, a) - specfun::reg_inc_beta(lower, a, a));
        return std::pow(u, power) * inner;
    };
    const auto result = specfun::integrate_singular(outer, 1.0, 2.0, tol, 14);
    return result.value / (alpha * alpha * alpha);
}

enum class ConjectureKind { N12, N3, AP };

inline double conjecture_rhs(ConjectureKind kind, double alpha) {
    require_below_three(alpha, "conjecture_rhs");
    switch (kind) {
        case ConjectureKind::N3:
            return constant_N3(alpha);
        case ConjectureKind::N12:
            return constant_N3(alpha) + I_of_alpha(alpha);
        case ConjectureKind::AP:
            return std::pow(2.0, -1.0 / alpha - 1.0) * (constant_N3(alpha) + I_of_alpha(alpha));
    }
    throw DomainError("unknown conjecture kind");
}

/// Every constant available at alpha (and the two-exponent leading constant at
/// (alpha, alpha2)), tagged by the formula that produced it.
inline std::vector<ConstantBundle> constants_for(double alpha, double alpha2) {
    std::vector<ConstantBundle> out;
    const auto forms = leading_constant_R_forms(alpha, alpha2);
    out.push_back({alpha, alpha2, leading_constant_R(alpha, alpha2), "leading_R_gamma"});
    out.push_back({alpha, alpha2, forms.beta_form, "leading_R_beta"});
    if (alpha < 3.0) {
        out.push_back({alpha, alpha, constant_N3(alpha), "N3"});
        out.push_back({alpha, alpha, I_of_alpha(alpha), "I"});
        out.push_back({alpha, alpha, conjecture_rhs(ConjectureKind::N12, alpha), "N12"});
        out.push_back({alpha, alpha, conjecture_rhs(ConjectureKind::AP, alpha), "AP"});
    }
    return out;
}

enum class OracleRegion {
    UnitSquare,             // 0 < x, y <= 1
    Simplex,                // x, y > 0, x + y <= 1
    UpperTriangle,          // 0 < x, y <= 1, x + y > 1
    ArithmeticProgression,  // 0 < x < y, 2y - x <= 1, integrand (x y (2y-x))^(1/a-1)
};

/// Grading exponent used when the caller passes grading = 0. Large enough that
/// (x y (x+y))^(1/a-1) becomes bounded and smooth along the axes and at the
/// origin after x = s^m, y = t^m.
inline double default_grading(double alpha) {
    return std::max(2.0 * alpha, 2.0 / (3.0 / alpha - 1.0) + 1.0);
}

/**
 * alpha^-3 times the integral of (x y (x+y))^(1/alpha-1) over `region`, by the
 * midpoint rule on a grid x grid tensor mesh in (s, t) with x = s^m, y = t^m.
 * Cells cut by the region boundary are shrunk to the covered part and sampled
 * at its midpoint. grading = 1 is the plain uniform midpoint rule, whose error
 * decays only like grid^-(3/alpha-1).
 *
 * Columns are summed independently and combined by a fixed pairwise reduction,
 * so the result is bit-identical for any number of jobs.
 */
inline double double_integral_oracle(OracleRegion region, double alpha, std::size_t grid, double grading = 0.0,
                                     unsigned jobs = 1) {
    if (grid < 100) throw DomainError("double_integral_oracle requires grid >= 100");
    if (!(alpha > 1.0) || !(alpha < 3.0)) throw DomainError("double_integral_oracle requires 1 < alpha < 3");
    const double m = grading > 0.0 ? grading : default_grading(alpha);
    const double gamma = 1.0 / alpha - 1.0;
    const double inv_m = 1.0 / m;
    const double n = static_cast<double>(grid);

    std::vector<double> cell_y(grid);
    std::vector<double> cell_w(grid);
    for (std::size_t j = 0; j < grid; ++j) {
        const double t = (static_cast<double>(j) + 0.5) / n;
        cell_y[j] = std::pow(t, m);
        cell_w[j] = m * std::pow(t, m - 1.0) / n;
    }

    const bool ap = region == OracleRegion::ArithmeticProgression;
    auto integrand = [&](double x, double y) {
        const double third = ap ? 2.0 * y - x : x + y;
        return std::pow(x * y * third, gamma);
    };

    std::vector<double> columns(grid);
    parallel_for(grid, jobs, [&](std::size_t i) {
        const double x = cell_y[i];
        double ylo = 0.0;
        double yhi = 1.0;
        switch (region) {
            case OracleRegion::UnitSquare:
                break;
            case OracleRegion::Simplex:
                yhi = 1.0 - x;
                break;
            case OracleRegion::UpperTriangle:
                ylo = 1.0 - x;
                break;
            case OracleRegion::ArithmeticProgression:
                ylo = x;
                yhi = 0.5 * (1.0 + x);
                break;
        }
        if (!(yhi > ylo)) {
            columns[i] = 0.0;
            return;
        }
        const double tlo = std::pow(ylo, inv_m);
        const double thi = std::pow(yhi, inv_m);
        const auto first = static_cast<std::size_t>(std::floor(tlo * n));
        const auto last = std::min(grid, static_cast<std::size_t>(std::ceil(thi * n)));
        CompensatedSum column;
        for (std::size_t j = first; j < last; ++j) {
            const double c0 = static_cast<double>(j) / n;
            const double c1 = static_cast<double>(j + 1) / n;
            if (c0 >= tlo && c1 <= thi) {
                column.add(cell_w[j] * integrand(x, cell_y[j]));
                continue;
            }
            const double lo = std::max(c0, tlo);
            const double hi = std::min(c1, thi);
            if (!(hi > lo)) continue;
            const double t = 0.5 * (lo + hi);
            column.add(m * std::pow(t, m - 1.0) * (hi - lo) * integrand(x, std::pow(t, m)));
        }
        columns[i] = cell_w[i] * column.value();
    });

    const double total = pairwise_sum(std::span<const double>(columns));
    return total / (alpha * alpha * alpha);
}

}  // namespace pslab
