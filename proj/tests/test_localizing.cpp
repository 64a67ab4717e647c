// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The harmonic-certify Authors

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "hcert/localizing.hpp"

using namespace hcert;
using Catch::Approx;

namespace {

// Closed form in long double, away from the removable singularities.
long double phi_naive(long double x)
{
    const long double p = 3.14159265358979323846264338327950288L;
    const long double s = std::sin(p * x);
    return s * s / (p * p) *
           (2.0L / 3.0L * (1.0L / x - 1.0L / (x - 3.0L)) + 1.0L / ((x - 1.0L) * (x - 1.0L)) +
            1.0L / ((x - 2.0L) * (x - 2.0L)));
}

} // namespace

TEST_CASE("phi reference values", "[localizing]")
{
    CHECK(phi(1.0) == 1.0);
    CHECK(phi(2.0) == 1.0);
    CHECK(phi(0.0) == 0.0);
    CHECK(phi(3.0) == 0.0);
    CHECK(phi(7.0) == 0.0);
    CHECK(phi(1.5) == Approx(0.9006327434874468572789).epsilon(1e-14));
    CHECK(phi(-0.5) == Approx(-0.05455261189123963821232).epsilon(1e-13));
    CHECK(phi(0.7) == Approx(0.8584593119745429325757).epsilon(1e-14));
    CHECK(phi(2.25) == Approx(0.9030344308034133822317).epsilon(1e-14));
    CHECK(phi(4.5) == Approx(-0.005538585034779945299185).epsilon(1e-12));
}

TEST_CASE("phi is stable next to the nodes", "[localizing]")
{
    CHECK(phi(1.0 + 1e-7) == Approx(0.9999999999999871013).epsilon(1e-15));
    CHECK(phi(1e-6) == Approx(6.666681388890197e-7).epsilon(1e-10));
    for (double k : {0.0, 1.0, 2.0, 3.0}) {
        for (double h : {1e-12, 1e-9, 1e-6, -1e-6, -1e-9}) {
            CHECK(std::isfinite(phi(k + h)));
            CHECK(std::abs(phi(k + h) - phi(k)) < 1e-4);
        }
    }
}

TEST_CASE("phi matches the long double closed form", "[localizing]")
{
    for (int i = 0; i <= 4000; ++i) {
        const double x = -10.0 + 23.0 * i / 4000.0 + 1e-3;
        if (std::abs(x - std::nearbyint(x)) < 1e-2) continue;
        CHECK(phi(x) == Approx(static_cast<double>(phi_naive(x))).margin(1e-13));
    }
}

TEST_CASE("phi is a minorant of the indicator of [0,3]", "[localizing][property]")
{
    const int n = 100000;
    for (int i = 0; i <= n; ++i) {
        const double x = -50.0 + 103.0 * i / n;
        const double chi = (x >= 0.0 && x <= 3.0) ? 1.0 : 0.0;
        REQUIRE(phi(x) <= chi);
    }
}

TEST_CASE("integer samples of phi", "[localizing]")
{
    double s = 0.0;
    for (int k = -100; k <= 103; ++k) {
        s += phi(k);
        if (k != 1 && k != 2) CHECK(phi(k) == 0.0);
    }
    CHECK(s == 2.0);
}

TEST_CASE("phi_hat reference values", "[localizing]")
{
    CHECK(phi_hat(0.0) == Complex(2.0, 0.0));
    const auto third = phi_hat(1.0 / 3.0);
    CHECK(third.real() == Approx(-2.0 / 3.0).epsilon(1e-14));
    CHECK(std::abs(third.imag()) < 1e-15);
    const auto half = phi_hat(0.5);
    CHECK(std::abs(half.real()) < 1e-15);
    CHECK(half.imag() == Approx(-0.2122065907891937810).epsilon(1e-14));
    CHECK(phi_hat(1.0) == Complex{});
    CHECK(phi_hat(-1.0) == Complex{});
    CHECK(phi_hat(1.7) == Complex{});
    CHECK(std::abs(phi_hat(1.0 - 1e-12)) < 1e-10);
}

TEST_CASE("phi_hat is conjugate symmetric", "[localizing][property]")
{
    for (int i = 0; i <= 1000; ++i) {
        const double w = 1.2 * i / 1000.0;
        CHECK(phi_hat(-w) == std::conj(phi_hat(w)));
    }
}

TEST_CASE("phi_hat matches a quadrature of phi", "[localizing]")
{
    // trapezoid on [-T, T]; phi decays like x^-4 and the integrand is smooth
    const double T = 1000.0, h = 1.0 / 64.0;
    const auto n = static_cast<long>(2 * T / h);
    std::vector<double> xs(n + 1), vs(n + 1);
    for (long i = 0; i <= n; ++i) {
        xs[i] = -T + h * i;
        vs[i] = phi(xs[i]);
    }
    for (double w : {-1.2, -1.1, -0.9, -0.5, -0.2, 0.0, 0.1, 1.0 / 3.0, 0.5, 0.77, 0.95, 1.05, 1.15}) {
        Complex acc = 0.0;
        for (long i = 0; i <= n; ++i) {
            const double wt = (i == 0 || i == n) ? 0.5 : 1.0;
            acc += wt * vs[i] * std::polar(1.0, -two_pi * xs[i] * w);
        }
        acc *= h;
        CHECK(std::abs(acc - phi_hat(w)) < 1e-6);
    }
}

TEST_CASE("phi_hat gap", "[localizing]")
{
    CHECK(phi_hat_gap(0.0) == 0.0);
    CHECK(phi_hat_gap(1.0 / 3.0) == Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(phi_hat_gap(0.5) == Approx(1.787793409210806219).epsilon(1e-14));
    CHECK(phi_hat_gap(1.0) == 2.0);
    CHECK_THROWS_AS(phi_hat_gap(1.0001), DomainError);
    CHECK_THROWS_AS(phi_hat_gap(-1.5), DomainError);

    const double pi2 = pi * pi;
    for (int i = 0; i <= 10000; ++i) {
        const double w = static_cast<double>(i) / 10000.0;
        const double g = phi_hat_gap(w);
        if (w <= 1.0 / 3.0) REQUIRE(g >= pi2 * w * w);
        if (w >= 1.0 / 3.0) REQUIRE(g >= pi2 / 9.0);
        if (w > 0.0) REQUIRE(g > 0.0);
        REQUIRE(phi_hat_gap(-w) == g);
    }
}

TEST_CASE("dilated localizer", "[localizing]")
{
    const DilatedLocalizer two(2);
    for (double x : {-3.3, 0.1, 0.5, 1.7, 2.9, 4.4}) CHECK(phi_dilated(two, x) == Approx(phi(x)).margin(1e-15));

    const DilatedLocalizer loc(20);
    CHECK(loc.support_radius() == 3.0 / 21.0);
    CHECK(phi_hat_dilated(loc, 0.0) == Complex(14.0, 0.0));
    CHECK(phi_hat_dilated(loc, 1.0 / 7.0) == Complex{});
    CHECK(phi_hat_dilated(loc, -0.2) == Complex{});
    for (int i = 0; i <= 200; ++i) {
        const double x = -5.0 + 40.0 * i / 200.0;
        const double chi = (x >= 0.0 && x <= 21.0) ? 1.0 : 0.0;
        CHECK(loc(x) <= chi);
    }
    CHECK_THROWS_AS(DilatedLocalizer(0), InvalidArgument);
}

TEST_CASE("phase of the dilated transform", "[localizing]")
{
    CHECK(phase_theta(DilatedLocalizer(20), 0.0) == 0.0);
    CHECK(phase_theta(DilatedLocalizer(2), 0.5) == Approx(-pi / 2.0).epsilon(1e-14));
    const DilatedLocalizer loc(20);
    for (double w : {1e-6, 1e-5, -1e-5}) {
        CHECK(phase_theta(loc, w) == Approx(-pi * 21.0 * w).epsilon(1e-6));
    }
    CHECK_THROWS_AS(phase_theta(loc, 1.0 / 7.0), DomainError);
    CHECK_THROWS_AS(phase_theta(loc, -0.3), DomainError);
}

TEST_CASE("Hermite interpolation", "[localizing]")
{
    const HermiteNode nodes[] = {{1, 1, 0}, {2, 1, 0}, {0, 0, 2.0 / 3.0}, {3, 0, -2.0 / 3.0}};
    for (int i = 0; i <= 2000; ++i) {
        const double x = -20.0 + 43.0 * i / 2000.0;
        CHECK(jagerman_fogel_eval(nodes, x) == Approx(phi(x)).margin(1e-15));
    }
    const HermiteNode one[] = {{0, 1, 0}};
    CHECK(jagerman_fogel_eval(one, 0.0) == 1.0);
    CHECK(jagerman_fogel_eval(one, 5.0) == 0.0);
    const HermiteNode twice[] = {{0, 1, 0}, {0, 2, 0}};
    CHECK_THROWS_AS(jagerman_fogel_eval(twice, 0.5), InvalidArgument);
}
