#pragma once

/**
 * Exponential sums S = sum_{a <= n <= b} e(f(n)), e(x) = exp(2 pi i x), for the
 * phase families that appear in the counting arguments, together with
 * empirical checks of the classical derivative-test and exponent-pair bounds.
 *
 * The bounds carry unspecified absolute constants, so every checker reports
 * ratio = |S| / bound instead of a verdict. Derivative extrema are taken from
 * closed-form derivatives sampled at kDerivativeSamples evenly spaced points
 * (endpoints included).
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "pslab/error.hpp"
#include "pslab/exactfloor.hpp"
#include "pslab/parallel.hpp"
#include "pslab/summation.hpp"

namespace pslab {

enum class PhaseFamily {
    SectionThree,  // h1 x^(1/a1) + h2 (N - x)^(1/a2)
    Appendix,      // h1 x^a1 + h2 (X - x^a1)^(1/a2)
    Model,         // y x^(1-s) / (1-s), or y log x when s = 1
};

struct PhaseSpec {
    PhaseFamily family = PhaseFamily::Model;
    double h1 = 0.0;
    double h2 = 0.0;
    RationalExponent alpha1;
    RationalExponent alpha2;
    double scale = 0.0;  // N for SectionThree, X for Appendix
    double y = 0.0;
    double s = 0.0;

    static PhaseSpec section_three(long h1, long h2, RationalExponent a1, RationalExponent a2, double N) {
        if (h1 == 0 && h2 == 0) throw DomainError("phase needs a nonzero frequency");
        if (!(N > 0.0)) throw DomainError("phase scale must be positive");
        PhaseSpec p;
        p.family = PhaseFamily::SectionThree;
        p.h1 = static_cast<double>(h1);
        p.h2 = static_cast<double>(h2);
        p.alpha1 = a1;
        p.alpha2 = a2;
        p.scale = N;
        return p;
    }

    static PhaseSpec appendix(long h1, long h2, RationalExponent a1, RationalExponent a2, double X) {
        PhaseSpec p = section_three(h1, h2, a1, a2, X);
        p.family = PhaseFamily::Appendix;
        return p;
    }

    /// s may be any real here: s = 0, -1, -2 give linear, quadratic and cubic
    /// phases y x, y x^2 / 2, y x^3 / 3.
    static PhaseSpec model(double y, double s) {
        PhaseSpec p;
        p.family = PhaseFamily::Model;
        p.y = y;
        p.s = s;
        return p;
    }

    PhaseSpec negated() const {
        PhaseSpec p = *this;
        p.h1 = -h1;
        p.h2 = -h2;
        p.y = -y;
        return p;
    }

    /// Open domain of the phase; exp_sum and the checkers reject intervals outside it.
    bool in_domain(double x) const {
        switch (family) {
            case PhaseFamily::SectionThree:
                return x > 0.0 && x < scale;
            case PhaseFamily::Appendix:
                return x > 0.0 && std::pow(x, alpha1.value()) < scale;
            case PhaseFamily::Model:
                return s <= 0.0 || x > 0.0;
        }
        return false;
    }

    double value(double x) const { return derivative(0, x); }

    double derivative(int order, double x) const {
        switch (family) {
            case PhaseFamily::SectionThree: {
                const double a = alpha1.inverse();
                const double b = alpha2.inverse();
                const double w = scale - x;
                // d^k/dx^k (N - x)^b carries a factor (-1)^k
                const double sign = (order % 2 == 0) ? 1.0 : -1.0;
                return h1 * falling(a, order) * std::pow(x, a - order) +
                       sign * h2 * falling(b, order) * std::pow(w, b - order);
            }
            case PhaseFamily::Appendix: {
                const double c = alpha1.value();
                const double first = h1 * falling(c, order) * std::pow(x, c - order);
                return first + h2 * appendix_second(order, x);
            }
            case PhaseFamily::Model: {
                if (order == 0) {
                    if (s == 1.0) return y * std::log(x);
                    return y * std::pow(x, 1.0 - s) / (1.0 - s);
                }
                // d^k/dx^k of y x^(1-s)/(1-s) = y * falling(-s, k-1) * x^(-s-k+1)
                return y * falling(-s, order - 1) * std::pow(x, -s - order + 1);
            }
        }
        throw DomainError("unknown phase family");
    }

    /// d^k/dx^k of (X - x^c)^b with c = alpha1, b = 1/alpha2, for k = 0..3.
    double appendix_second(int order, double x) const {
        const double c = alpha1.value();
        const double b = alpha2.inverse();
        const double g = scale - std::pow(x, c);
        const double g1 = -c * std::pow(x, c - 1.0);
        const double g2 = -c * (c - 1.0) * std::pow(x, c - 2.0);
        const double g3 = -c * (c - 1.0) * (c - 2.0) * std::pow(x, c - 3.0);
        switch (order) {
            case 0:
                return std::pow(g, b);
            case 1:
                return b * std::pow(g, b - 1.0) * g1;
            case 2:
                return b * (b - 1.0) * std::pow(g, b - 2.0) * g1 * g1 + b * std::pow(g, b - 1.0) * g2;
            case 3:
                return b * (b - 1.0) * (b - 2.0) * std::pow(g, b - 3.0) * g1 * g1 * g1 +
                       3.0 * b * (b - 1.0) * std::pow(g, b - 2.0) * g1 * g2 + b * std::pow(g, b - 1.0) * g3;
            default:
                throw DomainError("only derivatives up to order 3 are available");
        }
    }

private:
    // a (a-1) ... (a-k+1)
    static double falling(double a, int k) {
        double r = 1.0;
        for (int i = 0; i < k; ++i) r *= a - i;
        return r;
    }
};

/// f2'' in the factored form (((a1-1)X + (1 - a1/a2) x^a1) x^-1 (X - x^a1)^-1) f2'(x),
/// used to cross-check the chain-rule derivative of the Appendix family.
inline double appendix_f2_second_factored(const PhaseSpec& phase, double x) {
    const double c = phase.alpha1.value();
    const double a2 = phase.alpha2.value();
    const double X = phase.scale;
    const double xc = std::pow(x, c);
    const double f2p = -c / a2 * std::pow(x, c - 1.0) * std::pow(X - xc, 1.0 / a2 - 1.0);
    return ((c - 1.0) * X + (1.0 - c / a2) * xc) / (x * (X - xc)) * f2p;
}

inline constexpr double kMaxSumLength = 1e8;
inline constexpr std::size_t kSumChunk = 1u << 16;

/// sum over integers n in [a, b] of e(f(n)). Each phase is reduced mod 1 before
/// multiplying by 2 pi; chunks are compensated sums combined pairwise.
inline std::complex<double> exp_sum(const PhaseSpec& phase, double a, double b, unsigned jobs = 1) {
    if (!(b - a <= kMaxSumLength)) throw IntervalTooLarge("exp_sum interval longer than 1e8");
    const double first = std::ceil(a);
    const double last = std::floor(b);
    if (last < first) return {0.0, 0.0};
    if (!phase.in_domain(first) || !phase.in_domain(last))
        throw DomainError("interval leaves the domain of the phase");
    const auto count = static_cast<std::size_t>(last - first) + 1;
    const std::size_t chunks = (count + kSumChunk - 1) / kSumChunk;
    std::vector<std::complex<double>> partial(chunks);
    parallel_for(chunks, jobs, [&](std::size_t c) {
        CompensatedComplexSum acc;
        const std::size_t begin = c * kSumChunk;
        const std::size_t end = std::min(count, begin + kSumChunk);
        for (std::size_t i = begin; i < end; ++i) {
            const double f = phase.value(first + static_cast<double>(i));
            const double angle = 2.0 * std::numbers::pi * frac(f);
            acc.add({std::cos(angle), std::sin(angle)});
        }
        partial[c] = acc.value();
    });
    return pairwise_sum(std::span<const std::complex<double>>(partial));
}

struct BoundReport {
    double sum_abs = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
    std::map<std::string, double> params;
};

inline constexpr std::size_t kDerivativeSamples = 10000;

struct DerivativeRange {
    double min_abs = 0.0;
    double max_abs = 0.0;
    bool constant_sign = true;  // no sign change and never zero
};

inline DerivativeRange sample_derivative(const PhaseSpec& phase, int order, double a, double b,
                                         std::size_t samples = kDerivativeSamples) {
    if (!phase.in_domain(a) || !phase.in_domain(b)) throw DomainError("interval leaves the domain of the phase");
    DerivativeRange r{std::numeric_limits<double>::infinity(), 0.0, true};
    int sign = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = (i + 1 == samples) ? b : a + (b - a) * static_cast<double>(i) / (samples - 1);
        const double d = phase.derivative(order, x);
        const int sd = (d > 0.0) - (d < 0.0);
        if (sd == 0 || (sign != 0 && sd != sign)) r.constant_sign = false;
        if (sign == 0) sign = sd;
        r.min_abs = std::min(r.min_abs, std::abs(d));
        r.max_abs = std::max(r.max_abs, std::abs(d));
    }
    return r;
}

namespace detail {

inline BoundReport finish_report(const PhaseSpec& phase, double a, double b, double bound) {
    BoundReport rep;
    rep.sum_abs = std::abs(exp_sum(phase, a, b));
    rep.bound = bound;
    rep.ratio = rep.sum_abs / bound;
    return rep;
}

}  // namespace detail

/// Kusmin-Landau: f' monotone and ||f'|| >= lambda1 give S << 1/lambda1.
inline BoundReport check_kusmin_landau(const PhaseSpec& phase, double a, double b) {
    if (!(b >= a)) throw DomainError("interval must satisfy a <= b");
    bool monotone = true;
    {
        // f' monotone <=> f'' does not change sign (zeros allowed)
        int sign = 0;
        for (std::size_t i = 0; i < kDerivativeSamples; ++i) {
            const double x = a + (b - a) * static_cast<double>(i) / (kDerivativeSamples - 1);
            const double d = phase.derivative(2, std::min(x, b));
            const int sd = (d > 0.0) - (d < 0.0);
            if (sd != 0 && sign != 0 && sd != sign) monotone = false;
            if (sign == 0) sign = sd;
        }
    }
    if (!monotone) throw HypothesisViolated("Kusmin-Landau: f' is not monotone on the interval");
    const double da = phase.derivative(1, a);
    const double db = phase.derivative(1, b);
    // a monotone f' avoiding every integer has its range inside one (k, k+1)
    if (std::floor(da) != std::floor(db)) throw HypothesisViolated("Kusmin-Landau: f' crosses an integer");
    double lambda1 = std::min(dist_to_int(da), dist_to_int(db));
    for (std::size_t i = 1; i + 1 < kDerivativeSamples; ++i) {
        const double x = a + (b - a) * static_cast<double>(i) / (kDerivativeSamples - 1);
        lambda1 = std::min(lambda1, dist_to_int(phase.derivative(1, x)));
    }
    if (!(lambda1 > 1e-12)) throw HypothesisViolated("Kusmin-Landau: ||f'|| vanishes on the interval");
    auto rep = detail::finish_report(phase, a, b, 1.0 / lambda1);
    rep.params["lambda1"] = lambda1;
    return rep;
}

/// van der Corput: lambda2 <= |f''| <= Lambda2 gives S << |I| Lambda2 lambda2^(-1/2) + lambda2^(-1/2).
inline BoundReport check_van_der_corput(const PhaseSpec& phase, double a, double b) {
    const double length = b - a;
    if (!(length >= 1.0)) throw HypothesisViolated("van der Corput: interval shorter than 1");
    const auto r = sample_derivative(phase, 2, a, b);
    if (!r.constant_sign || !(r.min_abs > 0.0))
        throw HypothesisViolated("van der Corput: f'' vanishes or changes sign");
    const double lam = r.min_abs;
    const double Lam = r.max_abs;
    auto rep = detail::finish_report(phase, a, b, length * Lam / std::sqrt(lam) + 1.0 / std::sqrt(lam));
    rep.params["lambda2"] = lam;
    rep.params["Lambda2"] = Lam;
    rep.params["c"] = Lam / lam;
    rep.params["length"] = length;
    return rep;
}

/// Third-derivative test: lambda3 <= |f'''| <= c lambda3 gives S <<_c |I| lambda3^(1/6) + lambda3^(-1/3).
/// The dependence on c is not modelled; c is reported alongside.
inline BoundReport check_third_derivative(const PhaseSpec& phase, double a, double b) {
    const double length = b - a;
    if (!(length >= 1.0)) throw HypothesisViolated("third-derivative test: interval shorter than 1");
    const auto r = sample_derivative(phase, 3, a, b);
    if (!r.constant_sign || !(r.min_abs > 0.0))
        throw HypothesisViolated("third-derivative test: f''' vanishes or changes sign");
    const double lam = r.min_abs;
    auto rep = detail::finish_report(phase, a, b, length * std::cbrt(std::sqrt(lam)) + 1.0 / std::cbrt(lam));
    rep.params["lambda3"] = lam;
    rep.params["Lambda3"] = r.max_abs;
    rep.params["c"] = r.max_abs / lam;
    rep.params["length"] = length;
    return rep;
}

struct ExponentPair {
    double k = 0.0;
    double l = 1.0;
};

inline constexpr ExponentPair kTrivialPair{0.0, 1.0};
inline constexpr ExponentPair kVanDerCorputPair{0.5, 0.5};
inline constexpr ExponentPair kSixthPair{1.0 / 6.0, 2.0 / 3.0};

/// Exponent pair (k, l) for the model phase y x^(1-s)/(1-s) on a subinterval of
/// [N, 2N]: S << L^k N^l + 1/L with L = y N^-s.
inline BoundReport check_exponent_pair(ExponentPair pair, double y, double s, double a, double b, double N) {
    if (!(y > 0.0) || !(s > 0.0)) throw HypothesisViolated("exponent pair: model phase needs y, s > 0");
    if (!(N >= 1.0) || !(a >= N) || !(b <= 2.0 * N) || !(a <= b))
        throw HypothesisViolated("exponent pair: interval must lie inside [N, 2N]");
    const double L = y * std::pow(N, -s);
    const auto phase = PhaseSpec::model(y, s);
    auto rep = detail::finish_report(phase, a, b, std::pow(L, pair.k) * std::pow(N, pair.l) + 1.0 / L);
    rep.params["k"] = pair.k;
    rep.params["l"] = pair.l;
    rep.params["L"] = L;
    rep.params["N"] = N;
    return rep;
}

struct KoksmaReport {
    std::uint64_t integers = 0;  // integers in (c1 N, c2 N]
    std::uint64_t count = 0;     // of those, how many satisfy both fractional conditions
    double expected = 0.0;       // (c2 - c1) N b1 b2
    double R = 0.0;              // count - expected
    double b1 = 0.0;
    double b2 = 0.0;
};

/// Direct count of c1 N < n <= c2 N with {-n^(1/a1)} < b1 and {-(N-n)^(1/a2)} < b2.
inline KoksmaReport koksma_count(std::uint64_t N, RationalExponent a1, RationalExponent a2, double c1, double c2,
                                 double b1, double b2) {
    if (!(0.0 < c1 && c1 < c2 && c2 < 1.0)) throw DomainError("koksma: need 0 < c1 < c2 < 1");
    if (!(b1 > 0.0 && b1 <= 1.0 && b2 > 0.0 && b2 <= 1.0)) throw DomainError("koksma: thresholds must be in (0,1]");
    const double Nd = static_cast<double>(N);
    const auto lo = static_cast<std::uint64_t>(std::floor(c1 * Nd)) + 1;
    const auto hi = static_cast<std::uint64_t>(std::floor(c2 * Nd));
    KoksmaReport rep;
    rep.b1 = b1;
    rep.b2 = b2;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        ++rep.integers;
        const bool first = frac(-std::pow(static_cast<double>(n), a1.inverse())) < b1;
        const bool second = frac(-std::pow(static_cast<double>(N - n), a2.inverse())) < b2;
        if (first && second) ++rep.count;
    }
    rep.expected = (c2 - c1) * Nd * b1 * b2;
    rep.R = static_cast<double>(rep.count) - rep.expected;
    return rep;
}

/// koksma_count with the thresholds b1 = phi_a1(c3 N), b2 = phi_a2(c4 N).
inline KoksmaReport koksma_error(std::uint64_t N, RationalExponent a1, RationalExponent a2, double c1, double c2,
                                 double c3, double c4) {
    if (!(c3 > 0.0 && c3 < 1.0 && c4 > 0.0 && c4 < 1.0)) throw DomainError("koksma: need c3, c4 in (0,1)");
    const double Nd = static_cast<double>(N);
    return koksma_count(N, a1, a2, c1, c2, phi(a1, c3 * Nd), phi(a2, c4 * Nd));
}

/// Binned star discrepancy of ({-n^(1/alpha)})_{n <= n_max}: the largest gap
/// between the empirical and uniform distribution functions at the bin edges.
inline double discrepancy(double alpha, std::uint64_t n_max, std::size_t bins) {
    if (bins < 10) throw DomainError("discrepancy requires at least 10 bins");
    if (!(alpha >= 1.0)) throw DomainError("discrepancy requires alpha >= 1");
    if (n_max == 0) throw DomainError("discrepancy requires n_max >= 1");
    std::vector<std::uint64_t> hist(bins, 0);
    const double inv = 1.0 / alpha;
    const double nb = static_cast<double>(bins);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const double point = frac(-std::pow(static_cast<double>(n), inv));
        const auto bin = std::min(bins - 1, static_cast<std::size_t>(point * nb));
        ++hist[bin];
    }
    double worst = 0.0;
    std::uint64_t below = 0;
    const double total = static_cast<double>(n_max);
    for (std::size_t k = 1; k <= bins; ++k) {
        below += hist[k - 1];
        worst = std::max(worst, std::abs(static_cast<double>(below) / total - static_cast<double>(k) / nb));
    }
    return worst;
}

}  // namespace pslab
