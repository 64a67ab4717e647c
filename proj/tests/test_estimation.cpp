// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The harmonic-certify Authors

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "hcert/estimation.hpp"
#include "hcert/random_configs.hpp"

using namespace hcert;
using Catch::Approx;

namespace {

ExponentialSum example()
{
    const double fr[]  = {0.1, 0.3, 0.6, 0.9};
    const Complex co[] = {1.1, -1.1, 2.0, 2.0};
    return ExponentialSum(fr, co);
}

} // namespace

TEST_CASE("single exponential", "[estimation]")
{
    const SampleGrid grid(0, 40);
    const auto s = sample(ExponentialSum::single(0.25, Complex(0.3, -2.0)), grid);
    const auto y = esprit(s, 1);
    REQUIRE(y.size() == 1);
    CHECK(std::abs(y[0].value() - 0.25) < 1e-10);
    const auto r = estimate(s, grid, 1);
    CHECK(std::abs(r.coefficients[0] - Complex(0.3, -2.0)) < 1e-10);
    CHECK(r.residual_norm < 1e-10);
}

TEST_CASE("noiseless recovery of the four-term example", "[estimation]")
{
    const auto grid = SampleGrid::symmetric(20);
    const auto s    = sample(example(), grid);
    for (std::optional<std::size_t> w : {std::optional<std::size_t>{}, std::optional<std::size_t>{20}}) {
        const auto r = estimate(s, grid, 4, w);
        REQUIRE(r.frequencies.size() == 4);
        const double expect[] = {0.1, 0.3, 0.6, 0.9};
        const Complex coef[]  = {1.1, -1.1, 2.0, 2.0};
        for (int i = 0; i < 4; ++i) {
            CHECK(wrap_distance(r.frequencies[i], Frequency(expect[i])) < 1e-8);
            CHECK(std::abs(r.coefficients[i] - coef[i]) < 1e-8);
        }
        CHECK(r.sum.size() == 4);
        CHECK_FALSE(r.ill_conditioned);
    }
}

TEST_CASE("ESPRIT preconditions", "[estimation]")
{
    const auto s = sample(example(), SampleGrid::symmetric(20));
    CHECK_THROWS_AS(esprit(s, 0), PreconditionViolated);
    CHECK_THROWS_AS(esprit(s, 41), PreconditionViolated);
    CHECK_THROWS_AS(esprit(s, 4, 3), PreconditionViolated);
    CHECK_THROWS_AS(esprit(s, 4, 38), PreconditionViolated);
    CHECK_NOTHROW(esprit(s, 4, 37));
    CHECK_THROWS_AS(esprit(s, 5), RankDeficient);
    const std::vector<Complex> zeros(41);
    CHECK_THROWS_AS(esprit(zeros, 1), RankDeficient);
}

TEST_CASE("least squares coefficients", "[estimation]")
{
    const SampleGrid grid(3, 9);
    const std::vector<Complex> flat(grid.size(), Complex(0.5, 0.25));
    const Frequency zero[] = {Frequency(0.0)};
    const auto fit = least_squares_coefficients(flat, grid, zero);
    CHECK(std::abs(fit.coefficients[0] - Complex(0.5, 0.25)) < 1e-14);
    CHECK(fit.gram_condition == Approx(1.0));

    const Frequency dup[] = {Frequency(0.1), Frequency(0.1)};
    CHECK_THROWS_AS(least_squares_coefficients(flat, grid, dup), DuplicateFrequency);
    CHECK_THROWS_AS(least_squares_coefficients(std::span<const Complex>(flat).first(3), grid, zero),
                    InvalidArgument);

    // nearly coincident columns are flagged, the solution is still returned
    const Frequency close[] = {Frequency(0.2), Frequency(0.2 + 1e-9)};
    const auto bad = least_squares_coefficients(flat, grid, close);
    CHECK(bad.ill_conditioned);
    CHECK(bad.coefficients.size() == 2);
}

TEST_CASE("ESPRIT is shift equivariant and commutes with conjugation", "[estimation][property]")
{
    RandomStream rng(4, 0);
    const auto grid = SampleGrid::symmetric(20);
    for (int i = 0; i < 50; ++i) {
        const auto f = random_separated_sum(rng, 4, 0.08);
        const auto base = estimate(sample(f, grid), grid, f.size());
        const double shift = rng.uniform();
        auto s = sample(f, grid);
        for (std::size_t k = 0; k < s.size(); ++k) s[k] *= unit_phase(shift * static_cast<double>(grid.start() + static_cast<std::int64_t>(k)));
        const auto moved = estimate(s, grid, f.size());
        for (const auto& t : base.sum.terms()) {
            bool found = false;
            for (const auto& u : moved.sum.terms()) {
                if (wrap_distance(u.frequency, Frequency(t.frequency.value() + shift)) < 1e-9) {
                    found = true;
                    CHECK(std::abs(u.coefficient) == Approx(std::abs(t.coefficient)).epsilon(1e-8));
                }
            }
            CHECK(found);
        }

        auto conj = sample(f, grid);
        for (auto& z : conj) z = std::conj(z);
        const auto mirrored = estimate(conj, grid, f.size());
        for (const auto& t : f.terms()) {
            bool found = false;
            for (const auto& u : mirrored.sum.terms()) {
                if (wrap_distance(u.frequency, Frequency(-t.frequency.value())) < 1e-8) {
                    found = true;
                    CHECK(std::abs(u.coefficient - std::conj(t.coefficient)) < 1e-8 * std::abs(t.coefficient) + 1e-12);
                }
            }
            CHECK(found);
        }
    }
}

TEST_CASE("noiseless exact recovery on random sums", "[estimation][property]")
{
    RandomStream rng(10, 0);
    const auto grid = SampleGrid::symmetric(20);
    for (int i = 0; i < 200; ++i) {
        const auto m = static_cast<std::size_t>(rng.integer(1, 6));
        const auto f = random_separated_sum(rng, m, 0.05);
        const auto r = estimate(sample(f, grid), grid, f.size());
        REQUIRE(r.sum.size() == f.size());
        for (std::size_t j = 0; j < f.size(); ++j) {
            REQUIRE(wrap_distance(r.sum.terms()[j].frequency, f.terms()[j].frequency) < 1e-8);
            REQUIRE(std::abs(r.sum.terms()[j].coefficient - f.terms()[j].coefficient) <
                    1e-8 * std::abs(f.terms()[j].coefficient));
        }
    }
}

TEST_CASE("noisy coefficients stay close", "[estimation]")
{
    const auto grid = SampleGrid::symmetric(20);
    const auto f    = example();
    double worst    = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RandomStream rng(seed, 0);
        auto s = sample(f, grid);
        for (auto& z : s) z += rng.complex_gaussian(0.1);
        const auto r = estimate(s, grid, 4);
        REQUIRE(r.sum.size() == 4);
        for (std::size_t j = 0; j < 4; ++j) {
            worst = std::max(worst, std::abs(r.sum.terms()[j].coefficient - f.terms()[j].coefficient));
        }
    }
    CHECK(worst < 0.2);
}
