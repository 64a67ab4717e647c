// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The harmonic-certify Authors

///
/// \file noise.hpp
///
/// Complex Gaussian noise eta_k = X_k1 + i X_k2 (each component N(0, sigma^2)),
/// the norm estimator
///
///   ||v|| <= | ||v + eta||^2 - 2 K sigma^2 |^{1/2} + (2 + sqrt 2) sigma K^{(1+delta)/4},
///
/// which holds with probability at least
/// 1 - exp(-K^{(1+delta)/2}) - 2 exp(-K^delta / 8), and the resulting
/// a posteriori certificate for an estimate g of a sum sampled on [-N, N].
///
#ifndef HCERT_NOISE_HPP
#define HCERT_NOISE_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "error.hpp"
#include "torus.hpp"

namespace hcert {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of stream `index` under `seed`; streams do not depend on each other.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept
{
    return splitmix64(splitmix64(seed) ^ splitmix64(~index));
}

///
/// Deterministic random stream. Gaussians use the Box-Muller transform on
/// 53-bit uniforms, so the output is identical on every platform.
///
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t index) : engine_(stream_seed(seed, index)) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer on [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    /// X1 + i X2 with independent X1, X2 ~ N(0, sigma^2).
    Complex complex_gaussian(double sigma)
    {
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        const double r  = sigma * std::sqrt(-2.0 * std::log(u1));
        return std::polar(r, two_pi * u2);
    }

private:
    std::mt19937_64 engine_;
};

struct NoiseModel {
    NoiseModel(double sigma, std::uint64_t seed) : sigma(sigma), seed(seed)
    {
        if (!(sigma > 0.0)) {
            throw InvalidArgument("noise sigma must be positive");
        }
    }

    double sigma;
    std::uint64_t seed;
};

/// `count` independent draws from stream `stream` of the model's seed.
inline std::vector<Complex> sample_noise(const NoiseModel& model, std::size_t count,
                                         std::uint64_t stream = 0)
{
    RandomStream rng(model.seed, stream);
    std::vector<Complex> out(count);
    for (auto& z : out) {
        z = rng.complex_gaussian(model.sigma);
    }
    return out;
}

inline void require_delta(double delta)
{
    if (!(delta > 0.0 && delta < 1.0)) {
        throw InvalidArgument("delta must lie in (0, 1)");
    }
}

/// | r - 2 K sigma^2 |^{1/2} + (2 + sqrt 2) sigma K^{(1+delta)/4}
inline double gauss_norm_estimator(double noisy_residual_norm_sq, std::int64_t k, double sigma,
                                   double delta)
{
    if (!(noisy_residual_norm_sq >= 0.0)) {
        throw InvalidArgument("residual norm must be nonnegative");
    }
    if (k < 1 || !(sigma >= 0.0)) {
        throw InvalidArgument("need K >= 1 and sigma >= 0");
    }
    const double kd = static_cast<double>(k);
    return std::sqrt(std::abs(noisy_residual_norm_sq - 2.0 * kd * sigma * sigma)) +
           (2.0 + std::sqrt(2.0)) * sigma * std::pow(kd, (1.0 + delta) / 4.0);
}

/// 1 - exp(-K^{(1+delta)/2}) - 2 exp(-K^delta / 8). May be <= 0 (vacuous).
inline double success_probability(std::int64_t k, double delta)
{
    const double kd = static_cast<double>(k);
    return 1.0 - std::exp(-std::pow(kd, (1.0 + delta) / 2.0)) -
           2.0 * std::exp(-std::pow(kd, delta) / 8.0);
}

enum class CminSource { Estimate, TruthAndEstimate };

inline std::string to_string(CminSource s)
{
    return s == CminSource::Estimate ? "estimate" : "truth_and_estimate";
}

struct APosterioriCertificate {
    double estimator = 0.0;         ///< noise-corrected bound on ||f - g|| over the grid
    double premise_value = 0.0;     ///< estimator^2
    double premise_threshold = 0.0; ///< (4N+4)/3 c_min^2
    double c_min = 0.0;
    CminSource c_min_source = CminSource::Estimate;
    double noisy_residual_sq = 0.0; ///< ||f + eta - g||^2
    double success_probability = 0.0;
    bool probability_vacuous = false;
    double delta = 0.0;
    Verdict verdict = Verdict::PremiseFailed;

    // Experiment mode (ground truth known).
    std::optional<double> weighted_error;
    std::optional<double> sampling_distance; ///< ||f - g||^2 on the grid
    std::optional<bool> lemma_event;         ///< ||f - g|| <= estimator
    std::optional<bool> final_estimate_holds;
    bool matching_failed = false; ///< certified, yet some frequency stayed unmatched
};

///
/// Certificate for an estimate `g` from samples on [-N, N]. With `truth`, the
/// weighted frequency/coefficient error of g against it is evaluated and
/// compared with estimator^2; c_min then covers both sums.
///
inline APosterioriCertificate apost_certificate(std::span<const Complex> noisy_samples,
                                                const ExponentialSum& g, std::int64_t n,
                                                double sigma, double delta, double q,
                                                const ExponentialSum* truth = nullptr)
{
    if (n < 1) {
        throw InvalidArgument("N must be >= 1");
    }
    require_delta(delta);
    const auto grid = SampleGrid::symmetric(n);
    if (noisy_samples.size() != grid.size()) {
        throw InvalidArgument("expected 2N+1 samples on [-N, N]");
    }
    if (!(q >= wellposedness_threshold(n))) {
        throw ModelViolation("q must be at least 3/(2N+2)");
    }
    if (g.empty() || g.separation() < 2.0 * q) {
        throw ModelViolation("estimate is not in S(2q)");
    }
    if (truth != nullptr && (truth->empty() || truth->separation() < 2.0 * q)) {
        throw ModelViolation("ground truth is not in S(2q)");
    }

    const auto k    = static_cast<std::int64_t>(grid.size());
    const auto gs   = sample(g, grid);
    APosterioriCertificate c;
    c.delta               = delta;
    c.noisy_residual_sq   = squared_distance(noisy_samples, gs);
    c.estimator           = gauss_norm_estimator(c.noisy_residual_sq, k, sigma, delta);
    c.premise_value       = c.estimator * c.estimator;
    c.success_probability = success_probability(k, delta);
    c.probability_vacuous = c.success_probability <= 0.0;
    c.c_min               = g.min_modulus();
    c.c_min_source        = CminSource::Estimate;
    if (truth != nullptr) {
        c.c_min        = std::min(c.c_min, truth->min_modulus());
        c.c_min_source = CminSource::TruthAndEstimate;
    }
    c.premise_threshold = (4.0 * static_cast<double>(n) + 4.0) / 3.0 * c.c_min * c.c_min;
    c.verdict = c.premise_value <= c.premise_threshold ? Verdict::Certified : Verdict::PremiseFailed;

    if (truth != nullptr) {
        c.sampling_distance = squared_distance(sample(*truth, grid), gs);
        c.lemma_event       = std::sqrt(*c.sampling_distance) <= c.estimator;
        const auto matching = match_partition(*truth, g, wellposedness_threshold(n));
        if (matching.total()) {
            c.weighted_error       = weighted_frequency_error(matching, *truth, g, n);
            c.final_estimate_holds = within_tolerance(c.premise_value - *c.weighted_error, c.premise_value);
        } else if (c.verdict == Verdict::Certified) {
            c.matching_failed      = true;
            c.final_estimate_holds = false;
        }
    }
    return c;
}

} // namespace hcert

#endif
