#pragma once

/**
 * Exact counts of additive representations over PS(alpha):
 *
 *   R(N)     #{(n1,n2) : floor(n1^a1) + floor(n2^a2) = N}
 *   N12(x)   #{(l,m,n) : l,m <= x,        [l] + [m] = [n]}
 *   N3(x)    #{(l,m,n) : n <= x,          [l] + [m] = [n]}
 *   NAP(x)   #{(l,m,n) : l < m < n <= x,  [l] + [n] = 2[m]}
 *
 * where [k] = floor(k^alpha). Since k -> floor(k^alpha) is strictly increasing
 * for alpha > 1, a value in PS(alpha) has exactly one preimage and every
 * triple count is a count over value pairs. The triple counts walk a sorted
 * table of exact values with two pointers, which visits the same (l, m) pairs
 * as a membership test on every sum but without a root extraction per pair.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "pslab/asymptotics.hpp"
#include "pslab/error.hpp"
#include "pslab/exactfloor.hpp"

namespace pslab {

struct CountRecord {
    std::uint64_t parameter = 0;  // N for R, x for the triple counts
    RationalExponent alpha1;
    RationalExponent alpha2;
    std::uint64_t count = 0;
    double leading = 0.0;  // predicted main term; 0 when no formula applies
    double ratio = 0.0;    // count / leading, NaN when leading is 0
};

inline CountRecord make_count_record(std::uint64_t parameter, RationalExponent a1, RationalExponent a2,
                                     std::uint64_t count, double leading) {
    const double ratio =
        leading > 0.0 ? static_cast<double>(count) / leading : std::numeric_limits<double>::quiet_NaN();
    return {parameter, a1, a2, count, leading, ratio};
}

/// values()[n] = floor(n^alpha) for 1 <= n <= size(); values()[0] = 0.
class PsTable {
public:
    PsTable(RationalExponent alpha, std::uint64_t n_max) : alpha_(alpha) {
        values_.reserve(n_max + 1);
        values_.push_back(0);
        for (std::uint64_t n = 1; n <= n_max; ++n) values_.push_back(floor_pow(n, alpha));
    }

    /// All n with floor(n^alpha) <= value_max.
    static PsTable up_to_value(RationalExponent alpha, std::uint64_t value_max) {
        PsTable table(alpha, 0);
        for (std::uint64_t n = 1;; ++n) {
            const std::uint64_t v = floor_pow(n, alpha);
            if (v > value_max) break;
            table.values_.push_back(v);
        }
        return table;
    }

    std::uint64_t operator[](std::uint64_t n) const { return values_[n]; }
    std::uint64_t size() const { return values_.size() - 1; }
    std::span<const std::uint64_t> values() const { return values_; }
    RationalExponent alpha() const { return alpha_; }

private:
    RationalExponent alpha_;
    std::vector<std::uint64_t> values_;
};

namespace detail {

inline double leading_or_zero(ConjectureKind kind, double alpha, double x) {
    if (!(alpha < 3.0)) return 0.0;
    return conjecture_rhs(kind, alpha) * std::pow(x, 3.0 - alpha);
}

// Sums up to twice the largest value must stay representable.
inline void require_headroom(std::uint64_t v) {
    if (v > (std::numeric_limits<std::uint64_t>::max() >> 2))
        throw OverflowError("values too large for 64-bit counting");
}

}  // namespace detail

/// R(N): for each n1 with floor(n1^a1) < N, test whether the remainder is in PS(a2).
inline CountRecord count_R(std::uint64_t N, RationalExponent a1, RationalExponent a2) {
    if (N < 2) throw DomainError("count_R requires N >= 2");
    std::uint64_t count = 0;
    for (std::uint64_t n1 = 1;; ++n1) {
        const std::uint64_t v1 = floor_pow(n1, a1);
        if (v1 > N - 1) break;
        if (is_ps_member(N - v1, a2).member) ++count;
    }
    const double exponent = a1.inverse() + a2.inverse() - 1.0;
    return make_count_record(N, a1, a2, count,
                             leading_constant_R(a1, a2) * std::pow(static_cast<double>(N), exponent));
}

inline constexpr std::uint64_t kBruteForceCap = 100000;

/// R(N) by the definition: every (n1, n2) pair, comparing the sum of floors to N.
inline std::uint64_t count_R_bruteforce(std::uint64_t N, RationalExponent a1, RationalExponent a2,
                                        std::uint64_t cap = kBruteForceCap) {
    if (N > cap) throw CapExceeded("count_R_bruteforce: N = " + std::to_string(N) + " exceeds cap " +
                                   std::to_string(cap));
    if (N < 2) throw DomainError("count_R requires N >= 2");
    const auto t1 = PsTable::up_to_value(a1, N);
    const auto t2 = PsTable::up_to_value(a2, N);
    std::uint64_t count = 0;
    for (std::uint64_t n1 = 1; n1 <= t1.size(); ++n1) {
        for (std::uint64_t n2 = 1; n2 <= t2.size(); ++n2) {
            const std::uint64_t s = t1[n1] + t2[n2];
            if (s == N) ++count;
            if (s >= N) break;
        }
    }
    return count;
}

/// N3(x); strict_upper switches the bound on n from n <= x to n < x.
inline CountRecord count_N3(std::uint64_t x, RationalExponent alpha, bool strict_upper = false) {
    if (x < 2) throw DomainError("count_N3 requires x >= 2");
    const std::uint64_t n_max = strict_upper ? x - 1 : x;
    const PsTable v(alpha, n_max);
    detail::require_headroom(v[n_max]);
    std::uint64_t count = 0;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        const std::uint64_t target = v[n];
        std::uint64_t lo = 1;
        std::uint64_t hi = n - 1;
        while (lo <= hi) {
            const std::uint64_t s = v[lo] + v[hi];
            if (s == target) {
                count += lo == hi ? 1 : 2;
                ++lo;
                --hi;
            } else if (s < target) {
                ++lo;
            } else {
                --hi;
            }
        }
    }
    return make_count_record(x, alpha, alpha, count,
                             detail::leading_or_zero(ConjectureKind::N3, alpha.value(), static_cast<double>(x)));
}

/// N12(x): l, m <= x with no bound on n; n is whatever index the sum hits.
inline CountRecord count_N12(std::uint64_t x, RationalExponent alpha) {
    if (x < 2) throw DomainError("count_N12 requires x >= 2");
    const std::uint64_t top = floor_pow(x, alpha);
    detail::require_headroom(top);
    const auto v = PsTable::up_to_value(alpha, 2 * top);
    std::uint64_t count = 0;
    for (std::uint64_t n = 2; n <= v.size(); ++n) {
        const std::uint64_t target = v[n];
        std::uint64_t lo = 1;
        std::uint64_t hi = std::min(x, n - 1);
        while (lo <= hi) {
            const std::uint64_t s = v[lo] + v[hi];
            if (s == target) {
                count += lo == hi ? 1 : 2;
                ++lo;
                --hi;
            } else if (s < target) {
                ++lo;
            } else {
                --hi;
            }
        }
    }
    return make_count_record(x, alpha, alpha, count,
                             detail::leading_or_zero(ConjectureKind::N12, alpha.value(), static_cast<double>(x)));
}

/// NAP(x): three-term progressions [l] < [m] < [n] with n <= x (n < x if strict_upper).
inline CountRecord count_NAP(std::uint64_t x, RationalExponent alpha, bool strict_upper = false) {
    if (x < 2) throw DomainError("count_NAP requires x >= 2");
    const std::uint64_t n_max = strict_upper ? x - 1 : x;
    const PsTable v(alpha, n_max);
    detail::require_headroom(v[n_max]);
    const auto values = v.values();
    std::uint64_t count = 0;
    for (std::uint64_t m = 2; m < n_max; ++m) {
        const std::uint64_t target = 2 * v[m];
        // largest n <= n_max with v[n] < target
        const auto it = std::lower_bound(values.begin() + static_cast<std::ptrdiff_t>(m + 1), values.end(), target);
        std::uint64_t hi = static_cast<std::uint64_t>(it - values.begin()) - 1;
        std::uint64_t lo = 1;
        while (lo < m && hi > m) {
            const std::uint64_t s = v[lo] + v[hi];
            if (s == target) {
                ++count;
                ++lo;
                --hi;
            } else if (s < target) {
                ++lo;
            } else {
                --hi;
            }
        }
    }
    return make_count_record(x, alpha, alpha, count,
                             detail::leading_or_zero(ConjectureKind::AP, alpha.value(), static_cast<double>(x)));
}

}  // namespace pslab
