#pragma once

/**
 * Experiment grids for the normalized triple counts
 *
 *   ratio(alpha, N) = count(N) / (rhs(alpha) N^(3-alpha))
 *
 * and the alpha = 2 probes against the known x log x main terms.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "pslab/asymptotics.hpp"
#include "pslab/counting.hpp"
#include "pslab/error.hpp"
#include "pslab/exactfloor.hpp"
#include "pslab/parallel.hpp"

namespace pslab::lab {

struct ExperimentRow {
    std::string alpha;  // decimal text, parsed exactly
    std::uint64_t N = 0;
    std::uint64_t count = 0;
    double rhs = 0.0;
    double ratio = 0.0;
};

enum class CountKind { N12, N3, AP };

inline ConjectureKind conjecture_for(CountKind kind) {
    switch (kind) {
        case CountKind::N12:
            return ConjectureKind::N12;
        case CountKind::N3:
            return ConjectureKind::N3;
        case CountKind::AP:
            return ConjectureKind::AP;
    }
    throw DomainError("unknown count kind");
}

inline std::uint64_t run_count(CountKind kind, std::uint64_t x, RationalExponent alpha, bool strict_upper) {
    switch (kind) {
        case CountKind::N12:
            return count_N12(x, alpha).count;
        case CountKind::N3:
            return count_N3(x, alpha, strict_upper).count;
        case CountKind::AP:
            return count_NAP(x, alpha, strict_upper).count;
    }
    throw DomainError("unknown count kind");
}

/// Decimal strings start/100, (start+step)/100, ... with at least one
/// fractional digit ("2.0", "1.95").
inline std::vector<std::string> hundredths_grid(unsigned start, unsigned step, unsigned count) {
    std::vector<std::string> out;
    for (unsigned i = 0; i < count; ++i) {
        const unsigned v = start + i * step;
        std::string frac_digits = std::to_string(100 + v % 100).substr(1);
        if (frac_digits.back() == '0') frac_digits.pop_back();
        out.push_back(std::to_string(v / 100) + "." + frac_digits);
    }
    return out;
}

inline std::vector<std::string> figure1_alphas() { return hundredths_grid(190, 1, 21); }
inline std::vector<std::uint64_t> figure1_ns() { return {1000, 3000, 5000}; }
inline std::vector<std::string> figure2_left_alphas() { return figure1_alphas(); }
inline std::vector<std::uint64_t> figure2_left_ns() { return figure1_ns(); }
inline std::vector<std::string> figure2_right_alphas() { return hundredths_grid(110, 5, 29); }
inline std::vector<std::uint64_t> figure2_right_ns() { return {1000, 3000, 5000, 10000}; }

inline bool row_less(const ExperimentRow& a, const ExperimentRow& b) {
    const double va = parse_alpha(a.alpha).value();
    const double vb = parse_alpha(b.alpha).value();
    if (va != vb) return va < vb;
    return a.N < b.N;
}

/// One row per (alpha, N); grid points run concurrently, rows come back sorted.
inline std::vector<ExperimentRow> run_grid(CountKind kind, const std::vector<std::string>& alphas,
                                           const std::vector<std::uint64_t>& ns, unsigned jobs,
                                           bool strict_upper = false) {
    if (alphas.empty() || ns.empty()) throw DomainError("experiment grid is empty");
    std::vector<RationalExponent> exact;
    std::vector<double> rhs;
    for (const auto& a : alphas) {
        const auto e = parse_alpha(a);
        require_below_three(e.value(), "experiment grid");
        exact.push_back(e);
        rhs.push_back(conjecture_rhs(conjecture_for(kind), e.value()));
    }
    std::vector<ExperimentRow> rows(alphas.size() * ns.size());
    parallel_for(rows.size(), jobs, [&](std::size_t idx) {
        const std::size_t i = idx / ns.size();
        const std::uint64_t N = ns[idx % ns.size()];
        const std::uint64_t count = run_count(kind, N, exact[i], strict_upper);
        const double scale = rhs[i] * std::pow(static_cast<double>(N), 3.0 - exact[i].value());
        rows[idx] = {alphas[i], N, count, rhs[i], static_cast<double>(count) / scale};
    });
    std::stable_sort(rows.begin(), rows.end(), row_less);
    return rows;
}

enum class Panel { Left, Right };

/// Left panel: l, m <= N count; right panel: n <= N count.
inline std::vector<ExperimentRow> figure1(Panel panel, const std::vector<std::string>& alphas,
                                          const std::vector<std::uint64_t>& ns, unsigned jobs,
                                          bool strict_upper = false) {
    return run_grid(panel == Panel::Left ? CountKind::N12 : CountKind::N3, alphas, ns, jobs, strict_upper);
}

inline std::vector<ExperimentRow> figure2(const std::vector<std::string>& alphas, const std::vector<std::uint64_t>& ns,
                                          unsigned jobs, bool strict_upper = false) {
    return run_grid(CountKind::AP, alphas, ns, jobs, strict_upper);
}

/// Pythagorean triples and 3-APs in squares with n < x against their x log x main terms.
struct ProbeRow {
    std::string kind;  // "N3" or "AP"
    std::uint64_t x = 0;
    std::uint64_t count = 0;
    double main_term = 0.0;
    double ratio = 0.0;
};

inline double pythagoras_main_term(double x) { return x * std::log(x) / std::numbers::pi; }

inline double squares_ap_main_term(double x) {
    return std::numbers::sqrt2 * std::log(1.0 + std::numbers::sqrt2) / (std::numbers::pi * std::numbers::pi) * x *
           std::log(x);
}

inline std::vector<std::uint64_t> probe_xs() { return {1000, 2000, 5000, 10000}; }

inline std::vector<ProbeRow> pythagoras_probe(const std::vector<std::uint64_t>& xs, unsigned jobs) {
    if (xs.empty()) throw DomainError("probe needs at least one x");
    const RationalExponent two{2, 1};
    std::vector<ProbeRow> rows(2 * xs.size());
    parallel_for(rows.size(), jobs, [&](std::size_t idx) {
        const std::uint64_t x = xs[idx / 2];
        const double xd = static_cast<double>(x);
        if (idx % 2 == 0) {
            const auto c = count_N3(x, two, true).count;
            rows[idx] = {"N3", x, c, pythagoras_main_term(xd), static_cast<double>(c) / pythagoras_main_term(xd)};
        } else {
            const auto c = count_NAP(x, two, true).count;
            rows[idx] = {"AP", x, c, squares_ap_main_term(xd), static_cast<double>(c) / squares_ap_main_term(xd)};
        }
    });
    std::stable_sort(rows.begin(), rows.end(), [](const ProbeRow& a, const ProbeRow& b) {
        return a.kind != b.kind ? a.kind > b.kind : a.x < b.x;
    });
    return rows;
}

}  // namespace pslab::lab
