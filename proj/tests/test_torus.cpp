// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The harmonic-certify Authors

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "hcert/noise.hpp"
#include "hcert/random_configs.hpp"
#include "hcert/torus.hpp"

using namespace hcert;
using Catch::Approx;

namespace {

ExponentialSum example()
{
    const double fr[]  = {0.1, 0.3, 0.6, 0.9};
    const Complex co[] = {1.1, -1.1, 2.0, 2.0};
    return ExponentialSum(fr, co);
}

// long double reference for f(k)
std::complex<long double> naive(const ExponentialSum& f, long k)
{
    std::complex<long double> s = 0;
    for (const auto& t : f.terms()) {
        const long double a = 2.0L * 3.14159265358979323846264338327950288L *
                              static_cast<long double>(t.frequency.value()) * k;
        s += std::complex<long double>(t.coefficient) * std::complex<long double>(std::cos(a), std::sin(a));
    }
    return s;
}

} // namespace

TEST_CASE("frequencies reduce modulo one", "[torus]")
{
    CHECK(Frequency(1.25).value() == 0.25);
    CHECK(Frequency(-0.25).value() == 0.75);
    CHECK(Frequency(3.0).value() == 0.0);
    CHECK(Frequency(-1e-300).value() < 1.0);
    CHECK(Frequency(-1e-17).value() == 0.0);
    CHECK_THROWS_AS(Frequency(std::nan("")), InvalidArgument);
    CHECK_THROWS_AS(Frequency(HUGE_VAL), InvalidArgument);
}

TEST_CASE("wrap distance", "[torus]")
{
    CHECK(wrap_distance(Frequency(0.95), Frequency(0.05)) == Approx(0.10).margin(1e-15));
    CHECK(wrap_distance(Frequency(0.30), Frequency(0.30)) == 0.0);
    CHECK(wrap_distance(Frequency(0.10), Frequency(0.60)) == 0.5);
    CHECK(wrap_offset(Frequency(0.95), Frequency(0.05)) == Approx(0.10).margin(1e-15));
    CHECK(wrap_offset(Frequency(0.05), Frequency(0.95)) == Approx(-0.10).margin(1e-15));
}

TEST_CASE("wrap distance is a metric", "[torus][property]")
{
    RandomStream rng(7, 0);
    for (int i = 0; i < 2000; ++i) {
        const Frequency a(rng.uniform()), b(rng.uniform()), c(rng.uniform());
        CHECK(wrap_distance(a, b) >= 0.0);
        CHECK(wrap_distance(a, b) <= 0.5);
        CHECK(wrap_distance(a, b) == wrap_distance(b, a));
        CHECK(wrap_distance(a, c) <= wrap_distance(a, b) + wrap_distance(b, c) + 1e-15);
    }
}

TEST_CASE("separation", "[torus]")
{
    CHECK(example().separation() == Approx(0.2).margin(1e-15));
    const Frequency one[] = {Frequency(0.4)};
    CHECK(separation(one) == 0.5);
    CHECK(separation(std::span<const Frequency>{}) == 0.5);
    const Frequency anti[] = {Frequency(0.0), Frequency(0.5)};
    CHECK(separation(anti) == 0.5);
}

TEST_CASE("sample grid", "[torus]")
{
    CHECK(SampleGrid(0, 3).size() == 4);
    CHECK(SampleGrid::symmetric(20).size() == 41);
    CHECK_THROWS_AS(SampleGrid(2, 2), InvalidArgument);
    CHECK_THROWS_AS(SampleGrid(3, 1), InvalidArgument);
}

TEST_CASE("exponential sum invariants", "[torus]")
{
    const double fr[]  = {0.5, 0.1};
    const Complex co[] = {1.0, 2.0};
    const ExponentialSum f(fr, co);
    CHECK(f.frequencies()[0].value() == 0.1);
    CHECK(f.coefficients()[0] == Complex(2.0));
    CHECK(*f.coefficient(Frequency(0.5)) == Complex(1.0));
    CHECK_FALSE(f.coefficient(Frequency(0.3)));
    CHECK(f.min_modulus() == 1.0);
    CHECK(f.coefficient_norm_sq() == 5.0);

    const double dup[] = {0.25, 1.25};
    CHECK_THROWS_AS(ExponentialSum(dup, co), DuplicateFrequency);
    const Complex zero[] = {1.0, 0.0};
    CHECK_THROWS_AS(ExponentialSum(fr, zero), InvalidArgument);
    const Complex inf[] = {1.0, Complex(HUGE_VAL, 0)};
    CHECK_THROWS_AS(ExponentialSum(fr, inf), InvalidArgument);
}

TEST_CASE("sampling", "[torus]")
{
    const auto s = sample(ExponentialSum::single(0.25, 1.0), SampleGrid(0, 3));
    const Complex expect[] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(s[k] - expect[k]) < 1e-15);
    }
    for (auto v : sample(ExponentialSum::single(0.0, 2.0), SampleGrid(-2, 2))) {
        CHECK(v == Complex(2.0));
    }
    const auto e = sample(example(), SampleGrid::symmetric(20));
    REQUIRE(e.size() == 41);
    CHECK(std::abs(e[20] - Complex(4.0)) < 1e-14);
    for (long k = -20; k <= 20; ++k) {
        const auto ref = naive(example(), k);
        CHECK(std::abs(e[k + 20] - Complex(static_cast<double>(ref.real()), static_cast<double>(ref.imag()))) <
              1e-13);
    }
}

TEST_CASE("energy", "[torus]")
{
    CHECK(energy(ExponentialSum::single(0.123, Complex(0.6, 0.8) * 3.0), SampleGrid(0, 20)) ==
          Approx(21.0 * 9.0).epsilon(1e-14));
    const double fr[]  = {0.0, 0.001};
    const Complex co[] = {1.0, -1.0};
    CHECK(energy(ExponentialSum(fr, co), SampleGrid(1, 20)) ==
          Approx(0.1132092365270153177).epsilon(1e-12));
}

TEST_CASE("sampling is linear and energy ignores a global phase", "[torus][property]")
{
    RandomStream rng(11, 0);
    for (int i = 0; i < 100; ++i) {
        const auto f = random_separated_sum(rng, 4, 0.1);
        const auto g = rotate(random_separated_sum(rng, 3, 0.1), 0.013);
        bool disjoint = true;
        for (auto y : g.frequencies()) disjoint = disjoint && !f.coefficient(y);
        if (!disjoint) continue;
        std::vector<Term> all(f.terms().begin(), f.terms().end());
        all.insert(all.end(), g.terms().begin(), g.terms().end());
        const ExponentialSum h(all);
        const SampleGrid grid(-7, 12);
        const auto sf = sample(f, grid), sg = sample(g, grid), sh = sample(h, grid);
        for (std::size_t k = 0; k < sh.size(); ++k) {
            CHECK(std::abs(sh[k] - sf[k] - sg[k]) < 1e-12);
        }
        const auto rot = f.scaled(std::polar(1.0, rng.uniform(0, 6.28)));
        CHECK(energy(rot, grid) == Approx(energy(f, grid)).epsilon(1e-12));
    }
    // a single exponential keeps its energy under a frequency shift
    CHECK(energy(ExponentialSum::single(0.2, 1.5), SampleGrid(3, 9)) ==
          Approx(energy(ExponentialSum::single(0.77, 1.5), SampleGrid(3, 9))));
}

TEST_CASE("squared distance checks lengths", "[torus]")
{
    std::vector<Complex> a(3), b(4);
    CHECK_THROWS_AS(squared_distance(a, b), InvalidArgument);
}

TEST_CASE("match partition", "[torus]")
{
    {
        const Frequency y[]  = {Frequency(0.10), Frequency(0.50)};
        const Frequency yp[] = {Frequency(0.11), Frequency(0.80)};
        const auto m = match_partition(y, yp, 3.0 / 21.0);
        REQUIRE(m.pairs.size() == 1);
        CHECK(m.pairs[0].y == Frequency(0.10));
        CHECK(m.pairs[0].partner == Frequency(0.11));
        REQUIRE(m.unmatched.size() == 2);
        CHECK(m.unmatched[0].frequency == Frequency(0.50));
        CHECK(m.unmatched[0].origin == Origin::First);
        CHECK(m.unmatched[1].frequency == Frequency(0.80));
        CHECK(m.unmatched[1].origin == Origin::Second);
        CHECK_FALSE(m.total());
    }
    {
        const Frequency y[] = {Frequency(0.2), Frequency(0.7)};
        const auto m = match_partition(y, y, 0.1);
        CHECK(m.pairs.size() == 2);
        CHECK(m.unmatched.empty());
        CHECK(m.total());
    }
    {
        const Frequency y[]  = {Frequency(0.50)};
        const Frequency yp[] = {Frequency(0.48), Frequency(0.53)};
        CHECK_THROWS_AS(match_partition(y, yp, 0.1), AmbiguousMatch);
        CHECK_THROWS_AS(match_partition(yp, y, 0.1), AmbiguousMatch);
    }
    {
        // boundary-equal distance stays unmatched
        const Frequency y[]  = {Frequency(0.25)};
        const Frequency yp[] = {Frequency(0.5)};
        const auto m = match_partition(y, yp, 0.25);
        CHECK(m.pairs.empty());
        CHECK(m.unmatched.size() == 2);
    }
    {
        // pairing across the wrap point
        const Frequency y[]  = {Frequency(0.99)};
        const Frequency yp[] = {Frequency(0.01)};
        CHECK(match_partition(y, yp, 0.05).pairs.size() == 1);
    }
    const Frequency y[] = {Frequency(0.2)};
    CHECK_THROWS_AS(match_partition(y, y, 0.0), InvalidArgument);
}

TEST_CASE("self matching below the separation is the identity", "[torus][property]")
{
    RandomStream rng(5, 1);
    for (int i = 0; i < 200; ++i) {
        const auto f = random_separated_sum(rng, 6, rng.uniform(0.02, 0.2));
        const double t = f.separation() * rng.uniform(0.01, 1.0);
        const auto m = match_partition(f, f, t);
        CHECK(m.unmatched.empty());
        REQUIRE(m.pairs.size() == f.size());
        for (const auto& p : m.pairs) CHECK(p.y == p.partner);
    }
}

TEST_CASE("match partition invariants on random pair layouts", "[torus][property]")
{
    RandomStream rng(5, 2);
    for (int i = 0; i < 300; ++i) {
        const double t  = rng.uniform(0.05, 0.3);
        const auto cfg  = random_pair_configuration(rng, t, 10);
        const auto m    = match_partition(cfg.first, cfg.second, t);
        CHECK(m.pairs.size() == cfg.pairs);
        for (const auto& p : m.pairs) CHECK(wrap_distance(p.y, p.partner) < t);
        for (const auto& u : m.unmatched) {
            const auto& other = u.origin == Origin::First ? cfg.second : cfg.first;
            for (auto z : other.frequencies()) CHECK(wrap_distance(u.frequency, z) >= t);
        }
        CHECK(cfg.first.separation() >= t);
        CHECK(cfg.second.separation() >= t);
    }
}
