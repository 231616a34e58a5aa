#pragma once

// Gamma, Beta, the regularized incomplete Beta function and a double-exponential
// quadrature for integrands with algebraic endpoint singularities.

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <type_traits>
#include <utility>

#include "pslab/error.hpp"

namespace pslab::specfun {

namespace detail {

// Lanczos approximation, g = 7, nine terms.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoeff = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

inline double lanczos_series(double z) {
    double acc = kLanczosCoeff[0];
    for (std::size_t i = 1; i < kLanczosCoeff.size(); ++i)
        acc += kLanczosCoeff[i] / (z + static_cast<double>(i));
    return acc;
}

inline constexpr double kSqrtTwoPi = 2.5066282746310005024;

}  // namespace detail

inline double gamma(double x) {
    if (!(x > 0.0)) throw DomainError("gamma requires x > 0");
    if (x < 0.5) {
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
    }
    const double z = x - 1.0;
    const double t = z + detail::kLanczosG + 0.5;
    // t^(z+1/2) split in two halves so that large x does not overflow early
    const double half = std::pow(t, 0.5 * (z + 0.5));
    return detail::kSqrtTwoPi * half * (half * std::exp(-t)) * detail::lanczos_series(z);
}

inline double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
    if (x < 0.5) {
        return std::log(std::numbers::pi / std::abs(std::sin(std::numbers::pi * x))) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    const double t = z + detail::kLanczosG + 0.5;
    return std::log(detail::kSqrtTwoPi) + (z + 0.5) * std::log(t) - t +
           std::log(detail::lanczos_series(z));
}

inline double log_beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("beta requires a, b > 0");
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

inline double beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("beta requires a, b > 0");
    if (a + b < 100.0) return gamma(a) * gamma(b) / gamma(a + b);
    return std::exp(log_beta(a, b));
}

namespace detail {

// Continued fraction for I_t(a,b), modified Lentz.
inline double incbeta_fraction(double a, double b, double t) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-16;
    constexpr int max_iter = 20000;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * t / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const double md = m;
        const double m2 = 2.0 * md;
        double aa = md * (b - md) * t / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + md) * (qab + md) * t / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) return h;
    }
    throw NoConvergence("incomplete beta continued fraction did not converge");
}

}  // namespace detail

/// I_t(a,b). The fraction converges fast for t < (a+1)/(a+b+2); above that
/// point the symmetry I_t(a,b) = 1 - I_{1-t}(b,a) is used instead.
inline double reg_inc_beta(double t, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("reg_inc_beta requires a, b > 0");
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("reg_inc_beta requires 0 <= t <= 1");
    if (t == 0.0) return 0.0;
    if (t == 1.0) return 1.0;
    const double front = std::exp(a * std::log(t) + b * std::log1p(-t) - log_beta(a, b));
    if (t < (a + 1.0) / (a + b + 2.0)) return front * detail::incbeta_fraction(a, b, t) / a;
    return 1.0 - front * detail::incbeta_fraction(b, a, 1.0 - t) / b;
}

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Tanh-sinh quadrature of f over [a, b]. Nodes are placed by their distance to
/// the nearer endpoint, so f is never evaluated at a or b. f may be called as
/// f(x) or, when it accepts two arguments, as f(x, xc) with xc = a - x on the
/// left half and b - x on the right half; the complement keeps full relative
/// precision next to an endpoint, where b - x itself would cancel.
/// Singularities |x - endpoint|^g with g > -1 are integrated to full accuracy
/// when the integrand uses xc. The step is halved until two successive levels
/// agree to within tol.
template <typename F>
QuadratureResult integrate_singular(F&& f, double a, double b, double tol = 1e-10, int max_level = 12) {
    if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
    if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("quadrature bounds must be finite");
    if (a == b) return {0.0, 0.0, 1};
    if (a > b) {
        auto r = integrate_singular(std::forward<F>(f), b, a, tol, max_level);
        r.value = -r.value;
        return r;
    }

    constexpr double half_pi = std::numbers::pi / 2.0;
    constexpr double t_max = 6.5;
    const double mid = 0.5 * (a + b);
    const double half_width = 0.5 * (b - a);
    std::size_t evaluations = 0;

    const auto eval = [&](double x, double xc) {
        ++evaluations;
        if constexpr (std::is_invocable_v<F&, double, double>)
            return static_cast<double>(f(x, xc));
        else
            return static_cast<double>(f(x));
    };

    // Contribution of the node pair at +t and -t. With e = exp(-2s) the gap to
    // the endpoint is 2 e / (1 + e) times the half width and the weight is
    // 4 e / (1 + e)^2 times pi/2 cosh t, both free of overflow. A side is dead
    // once its node rounds onto the endpoint, unless f takes the complement,
    // which still resolves the node.
    const auto pair_term = [&](double t) -> std::pair<double, bool> {
        const double e = std::exp(-2.0 * half_pi * std::sinh(t));
        const double gap = half_width * 2.0 * e / (1.0 + e);
        const double w = half_pi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
        if (gap == 0.0 || w == 0.0) return {0.0, false};
        const double xl = a + gap;
        const double xr = b - gap;
        double term = 0.0;
        bool alive = false;
        constexpr bool with_complement = std::is_invocable_v<F&, double, double>;
        if (xl > a || with_complement) {
            term += w * eval(xl, -gap);
            alive = true;
        }
        if (xr < b || with_complement) {
            term += w * eval(xr, gap);
            alive = true;
        }
        return {term, alive};
    };

    double sum = half_pi * eval(mid, b - mid);
    for (int k = 1; k <= static_cast<int>(t_max); ++k) {
        const auto [term, alive] = pair_term(static_cast<double>(k));
        if (!alive) break;
        sum += term;
    }
    double estimate = half_width * sum;
    double error = std::abs(estimate);

    for (int level = 1; level <= max_level; ++level) {
        const double h = std::ldexp(1.0, -level);
        for (double t = h; t <= t_max; t += 2.0 * h) {
            const auto [term, alive] = pair_term(t);
            if (!alive) break;
            sum += term;
        }
        const double refined = half_width * h * sum;
        if (!std::isfinite(refined)) throw NoConvergence("quadrature produced a non-finite value");
        error = std::abs(refined - estimate);
        estimate = refined;
        if (level >= 3 && error <= tol) return {estimate, error, evaluations};
    }
    throw NoConvergence("tanh-sinh quadrature did not reach the tolerance after " +
                        std::to_string(max_level) + " levels");
}

}  // namespace pslab::specfun
