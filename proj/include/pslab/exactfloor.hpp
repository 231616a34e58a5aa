#pragma once

/**
 * Exact evaluation of floor(n^(p/q)) and membership in the
 * Piatetski-Shapiro set PS(alpha) = { floor(n^alpha) : n >= 1 }.
 *
 * Every decision in this header is an integer comparison. Floating point is
 * only used to guess a candidate, which is then certified by comparing
 * integer powers (unsigned __int128 when the powers fit, GMP otherwise).
 * A failed certification falls back to the pure big-integer path, so a bad
 * guess costs time, never correctness.
 */

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "pslab/error.hpp"

namespace pslab {

/// alpha = p/q > 1 in lowest terms, both parts fitting in 32 bits.
struct RationalExponent {
    std::uint32_t p = 2;
    std::uint32_t q = 1;

    static RationalExponent from_ratio(std::uint64_t num, std::uint64_t den) {
        if (den == 0) throw DomainError("exponent denominator is zero");
        const std::uint64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
        if (num <= den)
            throw AlphaNotGreaterThanOne(std::to_string(num) + "/" + std::to_string(den));
        if (num > std::numeric_limits<std::uint32_t>::max() ||
            den > std::numeric_limits<std::uint32_t>::max())
            throw DomainError("exponent " + std::to_string(num) + "/" + std::to_string(den) +
                              " does not fit in 32 bits");
        return {static_cast<std::uint32_t>(num), static_cast<std::uint32_t>(den)};
    }

    double value() const { return static_cast<double>(p) / static_cast<double>(q); }
    double inverse() const { return static_cast<double>(q) / static_cast<double>(p); }
    std::string to_string() const { return std::to_string(p) + "/" + std::to_string(q); }

    friend bool operator==(const RationalExponent&, const RationalExponent&) = default;
};

/// Parses a plain decimal literal ("1.5", "2", "1.23") into an exact exponent.
inline RationalExponent parse_alpha(std::string_view text) {
    const std::string str(text);
    if (text.empty()) throw MalformedDecimal(str);

    std::uint64_t digits = 0;
    std::uint64_t scale = 1;
    int total_digits = 0;
    bool seen_point = false;
    bool digit_after_point = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.') {
            if (seen_point || i == 0 || i + 1 == text.size()) throw MalformedDecimal(str);
            seen_point = true;
            continue;
        }
        if (c < '0' || c > '9') throw MalformedDecimal(str);
        if (++total_digits > 18) throw MalformedDecimal(str);
        digits = digits * 10 + static_cast<std::uint64_t>(c - '0');
        if (seen_point) {
            scale *= 10;
            digit_after_point = true;
        }
    }
    if (seen_point && !digit_after_point) throw MalformedDecimal(str);
    if (digits <= scale) throw AlphaNotGreaterThanOne(str);
    return RationalExponent::from_ratio(digits, scale);
}

namespace detail {

using u128 = unsigned __int128;

/// base^exp into out; false on overflow.
inline bool checked_pow(u128 base, std::uint32_t exp, u128& out) {
    u128 result = 1;
    while (true) {
        if (exp & 1u) {
            if (__builtin_mul_overflow(result, base, &result)) return false;
        }
        exp >>= 1;
        if (exp == 0) break;
        if (__builtin_mul_overflow(base, base, &base)) return false;
    }
    out = result;
    return true;
}

inline mpz_class to_mpz(std::uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return z;
}

inline mpz_class pow_mpz(std::uint64_t base, std::uint32_t exp) {
    mpz_class z = to_mpz(base);
    mpz_pow_ui(z.get_mpz_t(), z.get_mpz_t(), exp);
    return z;
}

inline bool fits_u64(const mpz_class& z) {
    return sgn(z) >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const mpz_class& z) {
    if (!fits_u64(z)) throw OverflowError("value does not fit in 64 bits");
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, z.get_mpz_t());
    return v;
}

/// Three-way comparison of a^ea against b^eb.
inline int compare_powers(std::uint64_t a, std::uint32_t ea, std::uint64_t b, std::uint32_t eb) {
    u128 lhs = 0;
    u128 rhs = 0;
    if (checked_pow(a, ea, lhs) && checked_pow(b, eb, rhs)) return (lhs > rhs) - (lhs < rhs);
    const int c = cmp(pow_mpz(a, ea), pow_mpz(b, eb));
    return (c > 0) - (c < 0);
}

// Candidates closer than this to an integer skip the fast path entirely.
inline constexpr double kFastPathMargin = 1e-6;
// Beyond 2^52 a double no longer resolves fractional parts.
inline constexpr double kFastPathCeiling = 4503599627370496.0;

}  // namespace detail

/// The unique y with y^r <= x < (y+1)^r, by integer Newton iteration from a
/// floating-point seed placed just above the root.
inline mpz_class nth_root_floor(const mpz_class& x, std::uint32_t r) {
    if (r == 0) throw DomainError("root index must be positive");
    if (sgn(x) < 0) throw DomainError("nth_root_floor of a negative number");
    if (r == 1 || x <= 1) return x;

    long exp2x = 0;
    const double mant = mpz_get_d_2exp(&exp2x, x.get_mpz_t());
    const double log2_root = (std::log2(mant) + static_cast<double>(exp2x)) / r;

    mpz_class y;
    if (log2_root < 52.0) {
        y = std::ceil(std::exp2(log2_root) * (1.0 + 1e-12)) + 1.0;
    } else {
        const double whole = std::floor(log2_root);
        y = std::ceil(std::exp2(log2_root - whole + 52.0) * (1.0 + 1e-12));
        y <<= static_cast<mp_bitcnt_t>(whole - 52.0);
        y += 1;
    }

    mpz_class power;
    const auto raise = [&](const mpz_class& base, std::uint32_t e) {
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), e);
        return power;
    };

    // Newton from below is not monotone; make sure we start above the root.
    while (raise(y, r) <= x) y += (y >> 20) + 1;

    mpz_class next;
    while (true) {
        next = x / raise(y, r - 1);
        next += (r - 1) * y;
        next /= r;
        if (next >= y) break;
        y = next;
    }

    while (raise(y, r) > x) --y;
    while (raise(y + 1, r) <= x) ++y;
    return y;
}

inline std::uint64_t nth_root_floor(std::uint64_t x, std::uint32_t r) {
    return detail::to_u64(nth_root_floor(detail::to_mpz(x), r));
}

/// floor(n^(p/q)) through the big-integer path only: nth_root_floor(n^p, q).
inline std::uint64_t floor_pow_exact(std::uint64_t n, RationalExponent alpha) {
    if (n == 0) throw DomainError("floor_pow requires n >= 1");
    return detail::to_u64(nth_root_floor(detail::pow_mpz(n, alpha.p), alpha.q));
}

/// floor(n^(p/q)) for arbitrarily large n. bit_cap > 0 limits the size of n^p.
inline mpz_class floor_pow_big(const mpz_class& n, RationalExponent alpha, std::size_t bit_cap = 0) {
    if (sgn(n) <= 0) throw DomainError("floor_pow requires n >= 1");
    if (bit_cap != 0 && mpz_sizeinbase(n.get_mpz_t(), 2) * alpha.p > bit_cap)
        throw OverflowError("n^p exceeds the configured cap of " + std::to_string(bit_cap) + " bits");
    mpz_class np;
    mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), alpha.p);
    return nth_root_floor(np, alpha.q);
}

/// floor(n^(p/q)), exact. Double-precision guess, certified by
/// f^q <= n^p < (f+1)^q; falls back to floor_pow_exact when the guess is too
/// close to an integer or fails certification.
inline std::uint64_t floor_pow(std::uint64_t n, RationalExponent alpha) {
    if (n == 0) throw DomainError("floor_pow requires n >= 1");
    if (n == 1) return 1;
    const double approx = std::pow(static_cast<double>(n), alpha.value());
    if (approx < detail::kFastPathCeiling) {
        const double fl = std::floor(approx);
        const double dist = std::min(approx - fl, fl + 1.0 - approx);
        if (dist >= detail::kFastPathMargin && fl >= 1.0) {
            const auto f = static_cast<std::uint64_t>(fl);
            if (detail::compare_powers(f, alpha.q, n, alpha.p) <= 0 &&
                detail::compare_powers(f + 1, alpha.q, n, alpha.p) > 0)
                return f;
        }
    }
    return floor_pow_exact(n, alpha);
}

/// Verdict for k in PS(alpha); witness is the n with floor(n^alpha) = k.
struct PsMembership {
    std::uint64_t k = 0;
    bool member = false;
    std::optional<std::uint64_t> witness;
};

/// Pure big-integer membership test. n0 = ceil((k^q)^(1/p)) is the smallest n
/// with n^p >= k^q, and k is a member iff n0^p < (k+1)^q.
inline PsMembership is_ps_member_exact(std::uint64_t k, RationalExponent alpha) {
    if (k == 0) throw DomainError("is_ps_member requires k >= 1");
    const mpz_class kq = detail::pow_mpz(k, alpha.q);
    mpz_class n0 = nth_root_floor(kq, alpha.p);
    mpz_class n0p;
    mpz_pow_ui(n0p.get_mpz_t(), n0.get_mpz_t(), alpha.p);
    if (n0p != kq) {
        n0 += 1;
        mpz_pow_ui(n0p.get_mpz_t(), n0.get_mpz_t(), alpha.p);
    }
    PsMembership out{k, false, std::nullopt};
    if (n0p < detail::pow_mpz(k + 1, alpha.q)) {
        out.member = true;
        out.witness = detail::to_u64(n0);
    }
    return out;
}

inline PsMembership is_ps_member(std::uint64_t k, RationalExponent alpha) {
    if (k == 0) throw DomainError("is_ps_member requires k >= 1");
    const double root = std::pow(static_cast<double>(k), alpha.inverse());
    if (root < detail::kFastPathCeiling) {
        const double cl = std::ceil(root);
        const double dist = std::min(cl - root, root - (cl - 1.0));
        if (dist >= detail::kFastPathMargin) {
            const auto n0 = static_cast<std::uint64_t>(cl);
            // n0 must be the smallest n with n^p >= k^q
            if (detail::compare_powers(n0, alpha.p, k, alpha.q) >= 0 &&
                detail::compare_powers(n0 - 1, alpha.p, k, alpha.q) < 0) {
                PsMembership out{k, false, std::nullopt};
                if (detail::compare_powers(n0, alpha.p, k + 1, alpha.q) < 0) {
                    out.member = true;
                    out.witness = n0;
                }
                return out;
            }
        }
    }
    return is_ps_member_exact(k, alpha);
}

/// {x} = x - floor(x)
inline double frac(double x) { return x - std::floor(x); }

/// ||x||, the distance from x to the nearest integer.
inline double dist_to_int(double x) { return std::abs(x - std::nearbyint(x)); }

/// phi_alpha(x) = (x+1)^(1/alpha) - x^(1/alpha), written to avoid cancellation.
/// Accepts alpha >= 1 so that the alpha = 1 case (identically 1) is available.
inline double phi(double alpha, double x) {
    if (!(alpha >= 1.0) || !(x >= 0.0)) throw DomainError("phi requires alpha >= 1 and x >= 0");
    if (alpha == 1.0) return 1.0;
    if (x == 0.0) return 1.0;
    const double inv = 1.0 / alpha;
    return std::pow(x, inv) * std::expm1(inv * std::log1p(1.0 / x));
}

inline double phi(RationalExponent alpha, double x) { return phi(alpha.value(), x); }

/// {-n^(1/a1)} < phi_a1(n) and {-(N-n)^(1/a2)} < phi_a2(N-n), decided exactly
/// through the equivalent statement n in PS(a1) and N-n in PS(a2).
inline bool frac_criterion(std::uint64_t n, std::uint64_t N, RationalExponent a1, RationalExponent a2) {
    if (n == 0 || n >= N) throw DomainError("frac_criterion requires 1 <= n < N");
    return is_ps_member(n, a1).member && is_ps_member(N - n, a2).member;
}

/// The same criterion evaluated literally in double precision. Diagnostic
/// only; it can misjudge points whose fractional part sits near a threshold.
inline bool frac_criterion_float(std::uint64_t n, std::uint64_t N, RationalExponent a1,
                                 RationalExponent a2) {
    if (n == 0 || n >= N) throw DomainError("frac_criterion requires 1 <= n < N");
    const auto x1 = static_cast<double>(n);
    const auto x2 = static_cast<double>(N - n);
    return frac(-std::pow(x1, a1.inverse())) < phi(a1, x1) &&
           frac(-std::pow(x2, a2.inverse())) < phi(a2, x2);
}

}  // namespace pslab
