#pragma once

/**
 * Explicit representations N = floor(n1^a1) + floor(n2^a2).
 *
 * find_representation first scans n1 in [(N/2)^(1/a1), (3N/4)^(1/a1)] for
 * values satisfying the two sufficient conditions
 *
 *   (1) 1 - {(N + 1/2 - n1^a1)^(1/a2)} <= (1/(2 a2)) (N + 1/2)^(1/a2 - 1)
 *   (2) {n1^a1} < 1/2
 *
 * and sets n2 = floor((N + 1/2 - n1^a1)^(1/a2)) + 1. The conditions are
 * evaluated in double precision and re-evaluated with 50 significant digits
 * when any quantity lies within 1e-9 of a threshold. They only select
 * candidates; a pair is returned only after the exact integer check. If the
 * scan finds nothing, every n1 is tried (no real arithmetic at all).
 */

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "pslab/error.hpp"
#include "pslab/exactfloor.hpp"

namespace pslab {

struct Representation {
    std::uint64_t n1 = 0;
    std::uint64_t n2 = 0;
    bool verified = false;
    bool via_lemma = false;  // found by the conditions scan rather than the exhaustive fallback
};

/// floor(n1^a1) + floor(n2^a2) == N, decided exactly.
inline bool certify_representation(std::uint64_t N, std::uint64_t n1, std::uint64_t n2, RationalExponent a1,
                                   RationalExponent a2) {
    if (n1 == 0 || n2 == 0) return false;
    const std::uint64_t v1 = floor_pow(n1, a1);
    if (v1 >= N) return false;
    return floor_pow(n2, a2) == N - v1;
}

struct LemmaCandidate {
    std::uint64_t n1 = 0;
    std::uint64_t n2 = 0;
    bool escalated = false;  // decided in 50-digit arithmetic
    bool certified = false;
};

namespace detail {

inline constexpr double kLemmaMargin = 1e-9;

struct LemmaEvaluation {
    bool accept = false;
    bool borderline = false;
    std::uint64_t n2 = 0;
};

inline LemmaEvaluation lemma_conditions_double(std::uint64_t N, std::uint64_t n1, RationalExponent a1,
                                               RationalExponent a2) {
    const double Nh = static_cast<double>(N) + 0.5;
    const double v = std::pow(static_cast<double>(n1), a1.value());
    const double rest = Nh - v;
    LemmaEvaluation e;
    if (!(rest > 0.0)) return e;
    const double inner = std::pow(rest, a2.inverse());
    const double lhs = 1.0 - frac(inner);
    const double threshold = std::pow(Nh, a2.inverse() - 1.0) / (2.0 * a2.value());
    const double fv = frac(v);
    e.borderline = std::abs(fv - 0.5) < kLemmaMargin || dist_to_int(v) < kLemmaMargin ||
                   std::abs(lhs - threshold) < kLemmaMargin || dist_to_int(inner) < kLemmaMargin;
    e.accept = lhs <= threshold && fv < 0.5;
    e.n2 = static_cast<std::uint64_t>(std::floor(inner)) + 1;
    return e;
}

inline LemmaEvaluation lemma_conditions_precise(std::uint64_t N, std::uint64_t n1, RationalExponent a1,
                                                RationalExponent a2) {
    using real = boost::multiprecision::cpp_bin_float_50;
    const real alpha1 = real(a1.p) / real(a1.q);
    const real inv2 = real(a2.q) / real(a2.p);
    const real Nh = real(N) + real(0.5);
    const real v = pow(real(n1), alpha1);
    const real rest = Nh - v;
    LemmaEvaluation e;
    if (rest <= 0) return e;
    const real inner = pow(rest, inv2);
    const real inner_floor = floor(inner);
    const real lhs = 1 - (inner - inner_floor);
    const real threshold = pow(Nh, inv2 - 1) * inv2 / 2;
    const real fv = v - floor(v);
    e.accept = lhs <= threshold && fv < real(0.5);
    e.n2 = inner_floor.convert_to<std::uint64_t>() + 1;
    return e;
}

}  // namespace detail

/// Every n1 in the scan window that passes both conditions, with its n2 and
/// the outcome of the exact check.
inline std::vector<LemmaCandidate> lemma_candidates(std::uint64_t N, RationalExponent a1, RationalExponent a2) {
    if (N < 2) throw DomainError("representations require N >= 2");
    const double Nd = static_cast<double>(N);
    const auto lo = static_cast<std::uint64_t>(std::max(1.0, std::ceil(std::pow(Nd / 2.0, a1.inverse()))));
    const auto hi = static_cast<std::uint64_t>(std::floor(std::pow(0.75 * Nd, a1.inverse())));
    std::vector<LemmaCandidate> out;
    for (std::uint64_t n1 = lo; n1 <= hi; ++n1) {
        auto e = detail::lemma_conditions_double(N, n1, a1, a2);
        bool escalated = false;
        if (e.borderline) {
            e = detail::lemma_conditions_precise(N, n1, a1, a2);
            escalated = true;
        }
        if (!e.accept) continue;
        out.push_back({n1, e.n2, escalated, certify_representation(N, n1, e.n2, a1, a2)});
    }
    return out;
}

/// First certified representation: lowest accepted n1 from the conditions scan,
/// otherwise lowest n1 overall. std::nullopt when N has no representation.
inline std::optional<Representation> find_representation(std::uint64_t N, RationalExponent a1, RationalExponent a2) {
    if (N < 2) throw DomainError("representations require N >= 2");
    for (const auto& c : lemma_candidates(N, a1, a2)) {
        if (c.certified) return Representation{c.n1, c.n2, true, true};
    }
    for (std::uint64_t n1 = 1;; ++n1) {
        const std::uint64_t v1 = floor_pow(n1, a1);
        if (v1 > N - 1) break;
        const auto m = is_ps_member(N - v1, a2);
        if (m.member) {
            return Representation{n1, *m.witness, certify_representation(N, n1, *m.witness, a1, a2), false};
        }
    }
    return std::nullopt;
}

/// All representations of N, sorted by n1.
inline std::vector<Representation> enumerate_representations(std::uint64_t N, RationalExponent a1,
                                                             RationalExponent a2) {
    if (N < 2) throw DomainError("representations require N >= 2");
    std::vector<Representation> out;
    for (std::uint64_t n1 = 1;; ++n1) {
        const std::uint64_t v1 = floor_pow(n1, a1);
        if (v1 > N - 1) break;
        const auto m = is_ps_member(N - v1, a2);
        if (m.member)
            out.push_back({n1, *m.witness, certify_representation(N, n1, *m.witness, a1, a2), false});
    }
    return out;
}

}  // namespace pslab
