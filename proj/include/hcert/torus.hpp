// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The harmonic-certify Authors

///
/// \file torus.hpp
///
/// Exponential sums f(x) = sum_y c_y exp(2 pi i y x) with frequencies on the
/// torus R/Z, their integer samples, and the pairing of two frequency sets
/// used by the stability bounds.
///
#ifndef HCERT_TORUS_HPP
#define HCERT_TORUS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace hcert {

using Complex = std::complex<double>;

inline constexpr double pi     = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// exp(2 pi i t), with t reduced modulo 1 first so large arguments keep their
/// phase accuracy.
inline Complex unit_phase(double t)
{
    t -= std::floor(t);
    return std::polar(1.0, two_pi * t);
}

///
/// A point of the torus R/Z, stored as its representative in [0, 1).
///
class Frequency {
public:
    constexpr Frequency() = default;

    explicit Frequency(double value) : value_(reduce(value)) {}

    double value() const noexcept { return value_; }

    friend auto operator<=>(const Frequency&, const Frequency&) = default;

private:
    static double reduce(double v)
    {
        if (!std::isfinite(v)) {
            throw InvalidArgument("frequency must be finite");
        }
        double r = v - std::floor(v);
        // v slightly below an integer can round up to exactly 1
        return r >= 1.0 ? 0.0 : r;
    }

    double value_ = 0.0;
};

/// |a - b|_T = min_k |a - b - k|, in [0, 1/2].
inline double wrap_distance(Frequency a, Frequency b) noexcept
{
    const double d = std::abs(a.value() - b.value());
    return std::min(d, 1.0 - d);
}

/// Signed offset `to - from` wrapped into [-1/2, 1/2).
inline double wrap_offset(Frequency from, Frequency to) noexcept
{
    double d = to.value() - from.value();
    if (d >= 0.5) {
        d -= 1.0;
    } else if (d < -0.5) {
        d += 1.0;
    }
    return d;
}

/// Minimum pairwise wrap distance. Sets with fewer than two points get 1/2,
/// the diameter of the torus.
inline double separation(std::span<const Frequency> ys)
{
    if (ys.size() < 2) {
        return 0.5;
    }
    std::vector<Frequency> sorted(ys.begin(), ys.end());
    std::sort(sorted.begin(), sorted.end());
    double sep = wrap_distance(sorted.front(), sorted.back());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        sep = std::min(sep, wrap_distance(sorted[i - 1], sorted[i]));
    }
    return sep;
}

/// dist_T(Y, Y') = min over cross pairs. Empty sets give 1/2.
inline double set_distance(std::span<const Frequency> a, std::span<const Frequency> b)
{
    double d = 0.5;
    for (auto x : a) {
        for (auto y : b) {
            d = std::min(d, wrap_distance(x, y));
        }
    }
    return d;
}

/// Contiguous integer range [start, end].
class SampleGrid {
public:
    SampleGrid(std::int64_t start, std::int64_t end) : start_(start), end_(end)
    {
        if (!(start < end)) {
            throw InvalidArgument("sample grid needs start < end");
        }
    }

    /// The symmetric grid -n, ..., n.
    static SampleGrid symmetric(std::int64_t n) { return {-n, n}; }

    std::int64_t start() const noexcept { return start_; }
    std::int64_t end() const noexcept { return end_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(end_ - start_ + 1); }

    friend bool operator==(const SampleGrid&, const SampleGrid&) = default;

private:
    std::int64_t start_;
    std::int64_t end_;
};

struct Term {
    Frequency frequency;
    Complex coefficient;
};

///
/// Finite exponential sum with nonzero coefficients and distinct frequencies.
/// Terms are kept sorted by frequency representative; every coefficient vector
/// handed out follows that order.
///
class ExponentialSum {
public:
    ExponentialSum() = default;

    explicit ExponentialSum(std::vector<Term> terms) : terms_(std::move(terms))
    {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.frequency < b.frequency; });
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const Complex c = terms_[i].coefficient;
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
                throw InvalidArgument("coefficients must be finite");
            }
            if (c == Complex{}) {
                throw InvalidArgument("coefficients must be nonzero");
            }
            if (i > 0 && terms_[i].frequency == terms_[i - 1].frequency) {
                throw DuplicateFrequency("duplicate frequency " +
                                         std::to_string(terms_[i].frequency.value()));
            }
        }
    }

    ExponentialSum(std::span<const double> frequencies, std::span<const Complex> coefficients)
        : ExponentialSum(zip(frequencies, coefficients))
    {
    }

    static ExponentialSum single(double frequency, Complex coefficient)
    {
        return ExponentialSum(std::vector<Term>{{Frequency(frequency), coefficient}});
    }

    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    std::span<const Term> terms() const noexcept { return terms_; }

    std::vector<Frequency> frequencies() const
    {
        std::vector<Frequency> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            out.push_back(t.frequency);
        }
        return out;
    }

    std::vector<Complex> coefficients() const
    {
        std::vector<Complex> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            out.push_back(t.coefficient);
        }
        return out;
    }

    /// Coefficient at an exact frequency representative, if present.
    std::optional<Complex> coefficient(Frequency y) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), y,
                                   [](const Term& t, Frequency v) { return t.frequency < v; });
        if (it == terms_.end() || it->frequency != y) {
            return std::nullopt;
        }
        return it->coefficient;
    }

    /// ||c||_2^2
    double coefficient_norm_sq() const noexcept
    {
        double s = 0.0;
        for (const auto& t : terms_) {
            s += std::norm(t.coefficient);
        }
        return s;
    }

    /// Smallest coefficient modulus; +inf for the empty sum.
    double min_modulus() const noexcept
    {
        double m = HUGE_VAL;
        for (const auto& t : terms_) {
            m = std::min(m, std::abs(t.coefficient));
        }
        return m;
    }

    double separation() const { return hcert::separation(frequencies()); }

    /// f(x) at a real argument.
    Complex operator()(double x) const
    {
        Complex s{};
        for (const auto& t : terms_) {
            s += t.coefficient * unit_phase(t.frequency.value() * x);
        }
        return s;
    }

    /// Same frequencies, every coefficient multiplied by `factor` (nonzero).
    ExponentialSum scaled(Complex factor) const
    {
        std::vector<Term> out(terms_.begin(), terms_.end());
        for (auto& t : out) {
            t.coefficient *= factor;
        }
        return ExponentialSum(std::move(out));
    }

    friend bool operator==(const ExponentialSum& a, const ExponentialSum& b)
    {
        return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                          [](const Term& x, const Term& y) {
                              return x.frequency == y.frequency && x.coefficient == y.coefficient;
                          });
    }

private:
    static std::vector<Term> zip(std::span<const double> fs, std::span<const Complex> cs)
    {
        if (fs.size() != cs.size()) {
            throw InvalidArgument("frequencies and coefficients differ in length");
        }
        std::vector<Term> out;
        out.reserve(fs.size());
        for (std::size_t i = 0; i < fs.size(); ++i) {
            out.push_back({Frequency(fs[i]), cs[i]});
        }
        return out;
    }

    std::vector<Term> terms_;
};

/// (f(k))_{k = A..B}, in grid order.
inline std::vector<Complex> sample(const ExponentialSum& f, const SampleGrid& grid)
{
    std::vector<Complex> out;
    out.reserve(grid.size());
    for (auto k = grid.start(); k <= grid.end(); ++k) {
        out.push_back(f(static_cast<double>(k)));
    }
    return out;
}

inline double squared_norm(std::span<const Complex> v) noexcept
{
    double s = 0.0;
    for (auto z : v) {
        s += std::norm(z);
    }
    return s;
}

/// ||a - b||_2^2 for equal-length vectors.
inline double squared_distance(std::span<const Complex> a, std::span<const Complex> b)
{
    if (a.size() != b.size()) {
        throw InvalidArgument("vectors differ in length");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::norm(a[i] - b[i]);
    }
    return s;
}

/// sum_{k=A}^{B} |f(k)|^2
inline double energy(const ExponentialSum& f, const SampleGrid& grid)
{
    return squared_norm(sample(f, grid));
}

enum class Origin { First, Second };

struct MatchedPair {
    Frequency y;       ///< member of the first set
    Frequency partner; ///< n(y), member of the second set
};

struct UnmatchedFrequency {
    Frequency frequency;
    Origin origin;
};

///
/// Y1 (first-set members of `pairs`), Y2 (their partners) and Y3 (`unmatched`,
/// drawn from both sets) at a given pairing threshold.
///
struct MatchPartition {
    std::vector<MatchedPair> pairs;
    std::vector<UnmatchedFrequency> unmatched;
    double threshold = 0.0;

    bool total() const noexcept { return unmatched.empty(); }
};

///
/// Pairs every y in `first` with the unique member of `second` strictly closer
/// than `threshold`. Frequencies at distance exactly `threshold` stay unmatched.
/// Throws AmbiguousMatch when any frequency of either set has two or more
/// candidates.
///
inline MatchPartition match_partition(std::span<const Frequency> first,
                                      std::span<const Frequency> second, double threshold)
{
    if (!(threshold > 0.0)) {
        throw InvalidArgument("match threshold must be positive");
    }
    MatchPartition out;
    out.threshold = threshold;

    std::vector<int> second_hits(second.size(), 0);
    std::vector<std::size_t> partner_of(first.size(), second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        for (std::size_t j = 0; j < second.size(); ++j) {
            if (wrap_distance(first[i], second[j]) < threshold) {
                if (partner_of[i] != second.size()) {
                    throw AmbiguousMatch("frequency " + std::to_string(first[i].value()) +
                                         " has several candidates within the threshold");
                }
                partner_of[i] = j;
                ++second_hits[j];
            }
        }
    }
    for (std::size_t j = 0; j < second.size(); ++j) {
        if (second_hits[j] > 1) {
            throw AmbiguousMatch("frequency " + std::to_string(second[j].value()) +
                                 " has several candidates within the threshold");
        }
    }

    for (std::size_t i = 0; i < first.size(); ++i) {
        if (partner_of[i] != second.size()) {
            out.pairs.push_back({first[i], second[partner_of[i]]});
        } else {
            out.unmatched.push_back({first[i], Origin::First});
        }
    }
    for (std::size_t j = 0; j < second.size(); ++j) {
        if (second_hits[j] == 0) {
            out.unmatched.push_back({second[j], Origin::Second});
        }
    }
    return out;
}

inline MatchPartition match_partition(const ExponentialSum& first, const ExponentialSum& second,
                                      double threshold)
{
    const auto a = first.frequencies();
    const auto b = second.frequencies();
    return match_partition(a, b, threshold);
}

} // namespace hcert

#endif
