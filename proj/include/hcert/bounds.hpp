// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The harmonic-certify Authors

///
/// \file bounds.hpp
///
/// Lower (and upper) bounds on the sampled energy sum_k |f(k)|^2 of exponential
/// sums, evaluated as numbers and checked against the exact energy:
///
///  - well-separated sums: (B-A+2-1/q) ||c||^2 <= sum_{A..B} |f(k)|^2
///                         <= (B-A+1/q) ||c||^2;
///  - sums made of well-separated singletons and close pairs (y, n(y)), where
///    the pair contributes through |c_y + c_n|^2 and |y - n(y)|^2 |c_y - c_n|^2;
///  - the well-posedness consequence for two sums f, g sampled on [-N, N];
///  - the induced smallest-singular-value bounds for Vandermonde matrices.
///
#ifndef HCERT_BOUNDS_HPP
#define HCERT_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "error.hpp"
#include "localizing.hpp"
#include "torus.hpp"

namespace hcert {

/// Relative slack allowed by every energy inequality check.
inline constexpr double bound_tolerance = 1e-12;

///
/// One inequality instance lhs >= rhs. `holds` is slack >= -tol * max(1, lhs).
///
struct BoundReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    std::map<std::string, double> constants;
    bool holds = false;
};

inline bool within_tolerance(double slack, double scale, double tol = bound_tolerance)
{
    return slack >= -tol * std::max(1.0, scale);
}

inline BoundReport make_lower_report(double lhs, double rhs, std::map<std::string, double> constants,
                                     double tol = bound_tolerance)
{
    BoundReport r;
    r.lhs       = lhs;
    r.rhs       = rhs;
    r.slack     = lhs - rhs;
    r.constants = std::move(constants);
    r.holds     = within_tolerance(r.slack, lhs, tol);
    return r;
}

// ---------------------------------------------------------------------------
// Well-separated sums
// ---------------------------------------------------------------------------

struct WellSepConstants {
    double lower;  ///< clamped at 0
    double upper;
    bool vacuous;  ///< unclamped lower constant was <= 0
};

inline WellSepConstants wellsep_constants(const SampleGrid& grid, double q)
{
    if (!(q > 0.0)) {
        throw InvalidArgument("separation q must be positive");
    }
    const double span = static_cast<double>(grid.end() - grid.start());
    // (n q - 1) / q rather than n - 1/q: fl(n * fl(1/n)) never exceeds 1, so
    // the critical separation q = 1/n lands on exactly zero.
    const double raw = ((span + 2.0) * q - 1.0) / q;
    return {std::max(0.0, raw), span + 1.0 / q, raw <= 0.0};
}

///
/// Two-sided check. `rhs` is the lower bound; the upper side travels in
/// constants["upper_rhs"], and `slack` is the smaller of both margins.
///
inline BoundReport check_wellsep(const ExponentialSum& f, const SampleGrid& grid, double q)
{
    const auto k = wellsep_constants(grid, q);
    if (f.separation() < q) {
        throw SeparationViolated("sum is not q-separated");
    }
    const double c2    = f.coefficient_norm_sq();
    const double lhs   = energy(f, grid);
    const double lower = k.lower * c2;
    const double upper = k.upper * c2;
    const double span  = static_cast<double>(grid.end() - grid.start());

    BoundReport r = make_lower_report(lhs, lower,
                                      {{"lower_constant", k.lower},
                                       {"upper_constant", k.upper},
                                       {"vacuous", k.vacuous ? 1.0 : 0.0},
                                       {"coefficient_norm_sq", c2},
                                       {"lower_rhs", lower},
                                       {"upper_rhs", upper},
                                       {"lower_slack", lhs - lower},
                                       {"upper_slack", upper - lhs},
                                       {"moitra_lower", std::max(0.0, span - 1.0 / q)},
                                       {"aubel_bolcskei_lower", std::max(0.0, span + 1.5 - 1.0 / q)}});
    r.slack = std::min(lhs - lower, upper - lhs);
    r.holds = within_tolerance(r.slack, lhs);
    return r;
}

// ---------------------------------------------------------------------------
// Singletons and close pairs
// ---------------------------------------------------------------------------

///
/// Modulated and Weakened sample k = 1..N. Symmetric samples x = k - (N+1)/2,
/// k = 1..N, which is the integer grid -(N-1)/2..(N-1)/2 for odd N and a
/// half-integer lattice for even N.
///
enum class BoundVariant { Modulated, Weakened, Symmetric };

inline std::string to_string(BoundVariant v)
{
    switch (v) {
    case BoundVariant::Modulated: return "modulated";
    case BoundVariant::Weakened: return "weakened";
    case BoundVariant::Symmetric: return "symmetric";
    }
    return "?";
}

inline BoundVariant parse_variant(const std::string& s)
{
    if (s == "modulated") return BoundVariant::Modulated;
    if (s == "weakened") return BoundVariant::Weakened;
    if (s == "symmetric") return BoundVariant::Symmetric;
    throw InvalidArgument("unknown bound variant '" + s + "'");
}

/// Pairing threshold 3/(N+1) for N samples.
inline double main_bound_threshold(std::int64_t n) { return 3.0 / static_cast<double>(n + 1); }

struct MainBoundTerms {
    double y3_weight = 0.0;        ///< 2/3 (N+1)
    double pair_sum_weight = 0.0;  ///< (N+1)/3
    double pair_diff_weight = 0.0; ///< pi^2 (N+1)^3 / (2 * 3^5)
    double y3_term = 0.0;
    double pair_sum_term = 0.0;
    double pair_diff_term = 0.0;

    double total() const noexcept { return y3_term + pair_sum_term + pair_diff_term; }
};

namespace detail {

inline Complex require_coefficient(const ExponentialSum& s, Frequency y)
{
    auto c = s.coefficient(y);
    if (!c) {
        throw InvalidArgument("frequency " + std::to_string(y.value()) + " has no coefficient");
    }
    return *c;
}

inline void require_samples(std::int64_t n)
{
    if (n < 1) {
        throw InvalidArgument("sample count N must be >= 1");
    }
}

} // namespace detail

///
/// Right-hand side of the pair bound for the sum `first + second` split by
/// `partition` (pairs run from `first` into `second`).
///
/// Modulated weighs |c_y + e^{-i theta} c_n|^2 and |c_y - e^{-i theta} c_n|^2
/// with theta = Arg phi_hat_N(n(y) - y); Symmetric drops the modulation;
/// Weakened keeps only |y - n(y)|^2 (|c_y|^2 + |c_n|^2).
///
inline MainBoundTerms main_bound_terms(const MatchPartition& partition, const ExponentialSum& first,
                                       const ExponentialSum& second, std::int64_t n,
                                       BoundVariant variant)
{
    detail::require_samples(n);
    if (partition.threshold != main_bound_threshold(n)) {
        throw ThresholdMismatch("partition threshold must be 3/(N+1) = " +
                                std::to_string(main_bound_threshold(n)));
    }
    const double m = static_cast<double>(n + 1);
    const DilatedLocalizer loc(n);

    MainBoundTerms t;
    t.y3_weight        = 2.0 * m / 3.0;
    t.pair_sum_weight  = m / 3.0;
    t.pair_diff_weight = pi * pi * m * m * m / (2.0 * 243.0);

    double y3 = 0.0;
    for (const auto& u : partition.unmatched) {
        const auto& owner = u.origin == Origin::First ? first : second;
        y3 += std::norm(detail::require_coefficient(owner, u.frequency));
    }
    t.y3_term = t.y3_weight * y3;

    for (const auto& p : partition.pairs) {
        const Complex a = detail::require_coefficient(first, p.y);
        const Complex b = detail::require_coefficient(second, p.partner);
        const double d  = wrap_offset(p.y, p.partner);
        switch (variant) {
        case BoundVariant::Weakened:
            t.pair_diff_term += t.pair_diff_weight * d * d * (std::norm(a) + std::norm(b));
            break;
        case BoundVariant::Modulated:
        case BoundVariant::Symmetric: {
            const Complex u = variant == BoundVariant::Modulated
                                  ? std::polar(1.0, -phase_theta(loc, d))
                                  : Complex(1.0, 0.0);
            t.pair_sum_term += t.pair_sum_weight * std::norm(a + u * b);
            t.pair_diff_term += t.pair_diff_weight * d * d * std::norm(a - u * b);
            break;
        }
        }
    }
    return t;
}

inline double main_bound_rhs(const MatchPartition& partition, const ExponentialSum& first,
                             const ExponentialSum& second, std::int64_t n, BoundVariant variant)
{
    return main_bound_terms(partition, first, second, n, variant).total();
}

/// Sampled energy of `first + second` on the variant's N sample points.
inline double main_bound_lhs(const ExponentialSum& first, const ExponentialSum& second,
                             std::int64_t n, BoundVariant variant)
{
    detail::require_samples(n);
    const double shift =
        variant == BoundVariant::Symmetric ? static_cast<double>(n + 1) / 2.0 : 0.0;
    double s = 0.0;
    for (std::int64_t k = 1; k <= n; ++k) {
        const double x = static_cast<double>(k) - shift;
        s += std::norm(first(x) + second(x));
    }
    return s;
}

///
/// Checks the pair bound for `first + second`. Each set must be
/// 3/(N+1)-separated; the pairing is computed at that threshold. On the
/// half-integer lattice (Symmetric, even N) y and y + 1 are different
/// functions, so a pair may not straddle the cut at 0 there.
///
inline BoundReport check_main_bound(const ExponentialSum& first, const ExponentialSum& second,
                                    std::int64_t n, BoundVariant variant)
{
    detail::require_samples(n);
    const double t = main_bound_threshold(n);
    if (first.separation() < t || second.separation() < t) {
        throw SeparationViolated("both frequency sets must be 3/(N+1)-separated");
    }
    const auto partition = match_partition(first, second, t);
    if (variant == BoundVariant::Symmetric && n % 2 == 0) {
        for (const auto& p : partition.pairs) {
            if (std::abs(p.partner.value() - p.y.value()) > 0.5) {
                throw PreconditionViolated(
                    "symmetric sampling with even N: a pair straddles the cut at 0");
            }
        }
    }
    const auto terms = main_bound_terms(partition, first, second, n, variant);
    const double lhs = main_bound_lhs(first, second, n, variant);
    return make_lower_report(lhs, terms.total(),
                             {{"Y3_weight", terms.y3_weight},
                              {"pair_sum_weight", terms.pair_sum_weight},
                              {"pair_diff_weight", terms.pair_diff_weight},
                              {"y3_term", terms.y3_term},
                              {"pair_sum_term", terms.pair_sum_term},
                              {"pair_diff_term", terms.pair_diff_term},
                              {"threshold", t},
                              {"pairs", static_cast<double>(partition.pairs.size())},
                              {"unmatched", static_cast<double>(partition.unmatched.size())}});
}

// ---------------------------------------------------------------------------
// Well-posedness on the symmetric grid -N..N
// ---------------------------------------------------------------------------

/// Pairing threshold 3/(2N+2) on the grid -N..N.
inline double wellposedness_threshold(std::int64_t n) { return 3.0 / static_cast<double>(2 * n + 2); }

///
/// sum_y [ (N+1)/3 |c_y - c_n(y)|^2 + 2 pi^2 (N+1)^3 / 3^5 |y - n(y)|^2 |c_y + c_n(y)|^2 ]
/// with y running over `f` and n(y) over `g`.
///
inline double weighted_frequency_error(const MatchPartition& matching, const ExponentialSum& f,
                                       const ExponentialSum& g, std::int64_t n)
{
    detail::require_samples(n);
    if (!matching.total()) {
        throw UnmatchedFrequencies("matching leaves " + std::to_string(matching.unmatched.size()) +
                                   " frequencies unmatched");
    }
    const double m     = static_cast<double>(n + 1);
    const double coeff = m / 3.0;
    const double freq  = 2.0 * pi * pi * m * m * m / 243.0;
    double s = 0.0;
    for (const auto& p : matching.pairs) {
        const Complex a = detail::require_coefficient(f, p.y);
        const Complex b = detail::require_coefficient(g, p.partner);
        const double d  = wrap_offset(p.y, p.partner);
        s += coeff * std::norm(a - b) + freq * d * d * std::norm(a + b);
    }
    return s;
}

enum class Verdict { Certified, PremiseFailed };

inline std::string to_string(Verdict v) { return v == Verdict::Certified ? "certified" : "premise_failed"; }

struct WellPosednessCertificate {
    double premise_value = 0.0;     ///< sum_{-N..N} |f(k) - g(k)|^2
    double premise_threshold = 0.0; ///< (4N+4)/3 c_min^2
    bool premise_holds = false;
    double c_min = 0.0;
    MatchPartition matching;
    std::optional<double> weighted_error; ///< present when the matching is total
    bool final_estimate_holds = false;    ///< weighted_error <= premise_value
    Verdict verdict = Verdict::PremiseFailed;
};

///
/// f, g in S(2q) with q >= 3/(2N+2). When the premise holds the matching at
/// 3/(2N+2) must be total; if it is not, UnmatchedFrequencies is thrown, since
/// that contradicts the bound.
///
inline WellPosednessCertificate wellposedness_certificate(const ExponentialSum& f,
                                                          const ExponentialSum& g, std::int64_t n,
                                                          double q)
{
    detail::require_samples(n);
    if (!(q >= wellposedness_threshold(n))) {
        throw ModelViolation("q must be at least 3/(2N+2)");
    }
    if (f.separation() < 2.0 * q || g.separation() < 2.0 * q) {
        throw ModelViolation("f and g must be 2q-separated");
    }
    if (f.empty() || g.empty()) {
        throw ModelViolation("f and g must have at least one term");
    }

    WellPosednessCertificate c;
    const auto grid     = SampleGrid::symmetric(n);
    c.c_min             = std::min(f.min_modulus(), g.min_modulus());
    c.premise_value     = squared_distance(sample(f, grid), sample(g, grid));
    c.premise_threshold = (4.0 * static_cast<double>(n) + 4.0) / 3.0 * c.c_min * c.c_min;
    c.premise_holds     = c.premise_value < c.premise_threshold;
    c.matching          = match_partition(f, g, wellposedness_threshold(n));

    if (c.matching.total()) {
        c.weighted_error = weighted_frequency_error(c.matching, f, g, n);
        c.final_estimate_holds =
            within_tolerance(c.premise_value - *c.weighted_error, c.premise_value);
    } else if (c.premise_holds) {
        throw UnmatchedFrequencies("premise holds but the matching is not total");
    }
    c.verdict = c.premise_holds ? Verdict::Certified : Verdict::PremiseFailed;
    return c;
}

// ---------------------------------------------------------------------------
// Vandermonde smallest singular values
// ---------------------------------------------------------------------------

/// sigma_min^2 >= N + 1 - 1/q for q-separated nodes, clamped at 0.
inline double vandermonde_bound_separated(std::int64_t n, double q)
{
    if (!(q > 0.0)) {
        throw InvalidArgument("separation q must be positive");
    }
    const double m = static_cast<double>(n + 1);
    return std::max(0.0, (m * q - 1.0) / q);
}

///
/// Pairwise colliding nodes at minimal distance tau:
/// pi^2 / (2 * 3^5) (N+1)^3 tau^2 for tau < 3/(N+1), otherwise 2/3 (N+1).
///
inline double vandermonde_bound_pairs(std::int64_t n, double q, double tau)
{
    if (q < main_bound_threshold(n)) {
        throw PreconditionViolated("pairs bound needs q >= 3/(N+1)");
    }
    if (!(tau >= 0.0)) {
        throw InvalidArgument("tau must be nonnegative");
    }
    const double m = static_cast<double>(n + 1);
    if (tau < main_bound_threshold(n)) {
        return pi * pi / 486.0 * m * m * m * tau * tau;
    }
    return 2.0 * m / 3.0;
}

} // namespace hcert

#endif
