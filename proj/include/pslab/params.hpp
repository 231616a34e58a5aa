#pragma once

/**
 * Feasibility witnesses for the inequality systems on (x1, x2) = (1/a1, 1/a2)
 * in the region x1, x2 in (1/2, 1), x1 + x2 > 3/2.
 *
 * Every check returns signed slacks (rhs - lhs for "lhs < rhs"), so a positive
 * slack means the strict inequality holds with that much room.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "pslab/error.hpp"

namespace pslab {

struct NamedSlack {
    std::string name;
    double value = 0.0;
};

inline void require_param_region(double x1, double x2) {
    if (!(x1 > 0.5 && x1 < 1.0 && x2 > 0.5 && x2 < 1.0 && x1 + x2 > 1.5))
        throw DomainError("(x1, x2) must satisfy x1, x2 in (1/2, 1) and x1 + x2 > 3/2");
}

/// The four polynomial inequalities that the beta windows rely on.
inline std::vector<NamedSlack> verify_lemma01(double x1, double x2) {
    require_param_region(x1, x2);
    const double d = 2.0 - x1 - x2;
    return {
        {"x1+2(x2-1)(2-x1-x2)>0", x1 + 2.0 * (x2 - 1.0) * d},
        {"x2+2(x1-1)(2-x1-x2)>0", x2 + 2.0 * (x1 - 1.0) * d},
        {"(2-x2)(2-x1-x2)<x1", x1 - (2.0 - x2) * d},
        {"(2-x1)(2-x1-x2)<x2", x2 - (2.0 - x1) * d},
    };
}

struct BetaWindows {
    double X1 = 0.0;
    double X2 = 0.0;
    double lower1 = 0.0;
    double upper1 = 0.0;
    double lower2 = 0.0;
    double upper2 = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
    // beta_i < min{1/2 + (1/2)/(2-x1-x2) - X_{3-i}, 1/(3 - x_{3-i})}, two entries per i
    std::vector<NamedSlack> cross_slacks;
};

/// Open windows for beta1 and beta2 and their midpoints.
inline BetaWindows feasible_betas(double x1, double x2) {
    require_param_region(x1, x2);
    const double d = 2.0 - x1 - x2;
    BetaWindows w;
    w.X1 = (1.0 - x1) / d;
    w.X2 = (1.0 - x2) / d;
    w.lower1 = std::max(0.0, 2.0 * (1.0 - x2) - 1.0 / d + 2.0 * w.X1);
    w.upper1 = std::min({w.X1, 2.0 * (1.0 - x2), 1.0 / d - 2.0});
    w.lower2 = std::max(0.0, 2.0 * (1.0 - x1) - 1.0 / d + 2.0 * w.X2);
    w.upper2 = std::min({w.X2, 2.0 * (1.0 - x1), 1.0 / d - 2.0});
    if (!(w.lower1 < w.upper1)) throw EmptyInterval("beta1 window is empty");
    if (!(w.lower2 < w.upper2)) throw EmptyInterval("beta2 window is empty");
    w.beta1 = 0.5 * (w.lower1 + w.upper1);
    w.beta2 = 0.5 * (w.lower2 + w.upper2);

    const double half_term = 0.5 + 0.5 / d;
    w.cross_slacks = {
        {"beta1<1/2+1/(2(2-x1-x2))-X2", half_term - w.X2 - w.beta1},
        {"beta1<1/(3-x2)", 1.0 / (3.0 - x2) - w.beta1},
        {"beta2<1/2+1/(2(2-x1-x2))-X1", half_term - w.X1 - w.beta2},
        {"beta2<1/(3-x1)", 1.0 / (3.0 - x1) - w.beta2},
    };
    for (const auto& s : w.cross_slacks)
        if (!(s.value > 0.0)) throw EmptyInterval("beta midpoint violates " + s.name);
    return w;
}

/// One constraint A*g + B < C on gamma_hat0 = g.
struct AffineConstraint {
    std::string name;
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double slack(double g) const { return C - B - A * g; }
};

inline std::array<AffineConstraint, 10> gamma0_constraints(double x1, double x2, double beta1, double beta2) {
    const double rhs = x1 + x2 - 1.0;
    return {{
        {"1", beta1, 0.0, 1.0 - x1},
        {"2", -(beta1 / 2.0 + x2 - 1.0), x2 - 0.5, rhs},
        {"3", beta1 / 2.0, 0.5, rhs},
        {"4", beta1 - 0.5, x1 - 0.5, rhs},
        {"5", beta1 + 1.0 - x2, x2 - 1.0, rhs},
        {"6", beta2, 0.0, 1.0 - x2},
        {"7", -(beta2 / 2.0 + x1 - 1.0), x1 - 0.5, rhs},
        {"8", beta2 / 2.0, 0.5, rhs},
        {"9", beta2 - 0.5, x2 - 0.5, rhs},
        {"10", beta2 + 1.0 - x1, x1 - 1.0, rhs},
    }};
}

struct Gamma0Witness {
    double lower = 0.0;  // 2 - x1 - x2, raised by any constraint with A < 0
    double upper = 0.0;  // min(1, roots of constraints with A > 0)
    double gamma_hat0 = 0.0;
    std::vector<NamedSlack> slacks;
};

/// Each constraint is affine in gamma_hat0, so the feasible set is an interval;
/// returns its midpoint together with all ten slacks there.
inline Gamma0Witness feasible_gamma0(double x1, double x2, double beta1, double beta2) {
    require_param_region(x1, x2);
    Gamma0Witness w;
    w.lower = 2.0 - x1 - x2;
    w.upper = 1.0;
    const auto constraints = gamma0_constraints(x1, x2, beta1, beta2);
    for (const auto& c : constraints) {
        const double room = c.C - c.B;
        if (c.A > 0.0) {
            w.upper = std::min(w.upper, room / c.A);
        } else if (c.A < 0.0) {
            w.lower = std::max(w.lower, room / c.A);
        } else if (!(room > 0.0)) {
            throw EmptyInterval("gamma_hat0 constraint " + c.name + " cannot hold");
        }
    }
    if (!(w.lower < w.upper)) throw EmptyInterval("gamma_hat0 window is empty");
    w.gamma_hat0 = 0.5 * (w.lower + w.upper);
    for (const auto& c : constraints) {
        w.slacks.push_back({c.name, c.slack(w.gamma_hat0)});
        if (!(w.slacks.back().value > 0.0))
            throw EmptyInterval("gamma_hat0 midpoint violates constraint " + c.name);
    }
    return w;
}

/// Slacks of the reduced inequalities 1'-4', 6'-9' obtained by setting
/// gamma_hat0 = 2 - x1 - x2 and dividing by it. Entry i corresponds to
/// constraint {1,2,3,4,6,7,8,9}[i].
inline std::array<double, 8> reduced_slacks(double x1, double x2, double beta1, double beta2) {
    const double d = 2.0 - x1 - x2;
    const double X1 = (1.0 - x1) / d;
    const double X2 = (1.0 - x2) / d;
    const double half_inv = 1.0 / (2.0 * d);
    return {
        X1 - beta1,
        -(-(beta1 / 2.0 + x2 - 1.0) + X1 - half_inv),
        half_inv - 1.0 - beta1 / 2.0,
        -X2 - (beta1 - 0.5 - half_inv),
        X2 - beta2,
        -(-(beta2 / 2.0 + x1 - 1.0) + X2 - half_inv),
        half_inv - 1.0 - beta2 / 2.0,
        -X1 - (beta2 - 0.5 - half_inv),
    };
}

struct ParamWitness {
    double x1 = 0.0;
    double x2 = 0.0;
    double X1 = 0.0;
    double X2 = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
    double gamma_hat0 = 0.0;
    std::vector<NamedSlack> slacks;  // 4 polynomial + 4 cross + 10 gamma constraints
};

inline ParamWitness build_param_witness(double x1, double x2) {
    ParamWitness out;
    out.x1 = x1;
    out.x2 = x2;
    out.slacks = verify_lemma01(x1, x2);
    const auto betas = feasible_betas(x1, x2);
    out.X1 = betas.X1;
    out.X2 = betas.X2;
    out.beta1 = betas.beta1;
    out.beta2 = betas.beta2;
    out.slacks.insert(out.slacks.end(), betas.cross_slacks.begin(), betas.cross_slacks.end());
    const auto g = feasible_gamma0(x1, x2, betas.beta1, betas.beta2);
    out.gamma_hat0 = g.gamma_hat0;
    for (const auto& s : g.slacks) out.slacks.push_back({"gamma" + s.name, s.value});
    return out;
}

}  // namespace pslab
