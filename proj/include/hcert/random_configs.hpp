// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The harmonic-certify Authors

///
/// \file random_configs.hpp
///
/// Seeded generators of admissible inputs for the randomized suites:
/// q-separated sums, and pairs of sums made of close pairs plus isolated
/// singletons with every other distance at least the threshold.
///
#ifndef HCERT_RANDOM_CONFIGS_HPP
#define HCERT_RANDOM_CONFIGS_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "noise.hpp"
#include "torus.hpp"

namespace hcert {

/// Copy of `f` with every frequency moved by `shift` (mod 1).
inline ExponentialSum rotate(const ExponentialSum& f, double shift)
{
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        out.push_back({Frequency(t.frequency.value() + shift), t.coefficient});
    }
    return ExponentialSum(std::move(out));
}

namespace detail {

struct Cluster {
    enum class Kind { Pair, FirstOnly, SecondOnly } kind;
    double width;       ///< pair gap, 0 for singletons
    bool first_leads;   ///< which set owns the left end of a pair
};

struct Layout {
    std::vector<double> starts;
    double gap_point; ///< middle of an inter-cluster gap
};

// Places clusters around the circle so that consecutive clusters are at least
// `spacing` apart; the leftover length is spread randomly over the gaps.
inline Layout place(RandomStream& rng, const std::vector<Cluster>& clusters, double spacing)
{
    double used = 0.0;
    for (const auto& c : clusters) {
        used += c.width + spacing;
    }
    const double slack = std::max(0.0, 1.0 - used);
    std::vector<double> weights(clusters.size());
    double total = 0.0;
    for (auto& w : weights) {
        w = rng.uniform() + 1e-3;
        total += w;
    }
    Layout out;
    double x = rng.uniform();
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        out.starts.push_back(x);
        const double gap = spacing + slack * weights[i] / total;
        if (i + 1 == clusters.size()) {
            out.gap_point = x + clusters[i].width + gap / 2.0;
        }
        x += clusters[i].width + gap;
    }
    return out;
}

inline Complex random_coefficient(RandomStream& rng)
{
    Complex c;
    do {
        c = rng.complex_gaussian(1.0);
    } while (std::abs(c) < 1e-3);
    return c;
}

} // namespace detail

/// `count` (or fewer if they do not fit) frequencies at mutual distance >= q.
inline ExponentialSum random_separated_sum(RandomStream& rng, std::size_t count, double q)
{
    const double spacing = q * (1.0 + 1e-9);
    count = std::max<std::size_t>(1, std::min(count, static_cast<std::size_t>(1.0 / spacing)));
    std::vector<detail::Cluster> clusters(count, {detail::Cluster::Kind::FirstOnly, 0.0, true});
    const auto layout = detail::place(rng, clusters, spacing);
    std::vector<Term> terms;
    for (double s : layout.starts) {
        terms.push_back({Frequency(s), detail::random_coefficient(rng)});
    }
    return ExponentialSum(std::move(terms));
}

struct PairConfiguration {
    ExponentialSum first;
    ExponentialSum second;
    double gap_point = 0.0; ///< a torus point at distance >= threshold/2 from all frequencies
    std::size_t pairs = 0;
};

///
/// Close pairs (gap uniform in (0, threshold)) and singletons from either set;
/// all distances other than within a pair are >= threshold.
///
inline PairConfiguration random_pair_configuration(RandomStream& rng, double threshold,
                                                   std::size_t max_clusters)
{
    const double spacing = threshold * (1.0 + 1e-9);
    const auto fit = std::max<std::size_t>(1, static_cast<std::size_t>(1.0 / spacing));
    const auto target = static_cast<std::size_t>(
        rng.integer(1, static_cast<std::int64_t>(std::min(fit, max_clusters))));

    std::vector<detail::Cluster> clusters;
    double used = 0.0;
    for (std::size_t i = 0; i < target; ++i) {
        const double u = rng.uniform();
        detail::Cluster c{detail::Cluster::Kind::Pair, 0.0, rng.uniform() < 0.5};
        if (u < 0.25) {
            c.kind = detail::Cluster::Kind::FirstOnly;
        } else if (u < 0.5) {
            c.kind = detail::Cluster::Kind::SecondOnly;
        } else {
            double g = rng.uniform();
            if (g == 0.0) {
                g = 0.5;
            }
            c.width = threshold * g * (1.0 - 1e-9);
        }
        if (used + c.width + spacing > 1.0) {
            break;
        }
        used += c.width + spacing;
        clusters.push_back(c);
    }
    if (clusters.empty()) {
        clusters.push_back({detail::Cluster::Kind::FirstOnly, 0.0, true});
    }

    const auto layout = detail::place(rng, clusters, spacing);
    std::vector<Term> first;
    std::vector<Term> second;
    PairConfiguration out;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        const auto& c  = clusters[i];
        const double x = layout.starts[i];
        switch (c.kind) {
        case detail::Cluster::Kind::FirstOnly:
            first.push_back({Frequency(x), detail::random_coefficient(rng)});
            break;
        case detail::Cluster::Kind::SecondOnly:
            second.push_back({Frequency(x), detail::random_coefficient(rng)});
            break;
        case detail::Cluster::Kind::Pair: {
            const double a = c.first_leads ? x : x + c.width;
            const double b = c.first_leads ? x + c.width : x;
            first.push_back({Frequency(a), detail::random_coefficient(rng)});
            second.push_back({Frequency(b), detail::random_coefficient(rng)});
            ++out.pairs;
            break;
        }
        }
    }
    out.first     = ExponentialSum(std::move(first));
    out.second    = ExponentialSum(std::move(second));
    out.gap_point = Frequency(layout.gap_point).value();
    return out;
}

} // namespace hcert

#endif
