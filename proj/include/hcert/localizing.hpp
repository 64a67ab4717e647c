// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The harmonic-certify Authors

///
/// \file localizing.hpp
///
/// The Paley-Wiener minorant phi <= chi_[0,3] with phi_hat(0) = 2, its Fourier
/// transform, dilations to sample count N, and the Hermite (value plus
/// derivative) interpolation formula on the integers it is built from:
///
///   f(x) = sin^2(pi x) / pi^2 * sum_k ( f(k) / (x - k)^2 + f'(k) / (x - k) ).
///
/// All evaluations go through the factor sin(pi x) / (pi (x - k)), which is a
/// sinc for the integer nearest to x, so the removable singularities at the
/// nodes cost no precision.
///
#ifndef HCERT_LOCALIZING_HPP
#define HCERT_LOCALIZING_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <span>

#include "error.hpp"
#include "torus.hpp"

namespace hcert {

struct HermiteNode {
    std::int64_t node;
    double value;      ///< f(node)
    double derivative; ///< f'(node)
};

namespace detail {

// sin(pi x) / pi up to the sign (-1)^round(x), which cancels in every product
// the interpolation formula forms.
struct NodalFactor {
    explicit NodalFactor(double x) : x(x)
    {
        const double r = x - std::nearbyint(x);
        s = std::sin(pi * r) / pi;
    }

    // s / (x - k); equals sinc(x - k) when k is the nearest integer.
    double over(std::int64_t k) const
    {
        const double t = x - static_cast<double>(k);
        return t == 0.0 ? 1.0 : s / t;
    }

    double x;
    double s;
};

} // namespace detail

/// phi(x) = sin^2(pi x)/pi^2 * ( 2/3 (1/x - 1/(x-3)) + 1/(x-1)^2 + 1/(x-2)^2 )
inline double phi(double x)
{
    const detail::NodalFactor f(x);
    const double q0 = f.over(0);
    const double q1 = f.over(1);
    const double q2 = f.over(2);
    const double q3 = f.over(3);
    return (2.0 / 3.0) * (f.s * q0 - f.s * q3) + q1 * q1 + q2 * q2;
}

///
/// Closed-form Fourier transform of phi:
///   (1 - w)(e^{-2 pi i w} + e^{-4 pi i w}) + (1 - e^{-6 pi i w}) / (3 pi i)
/// on [0, 1], conjugate-symmetric, and zero for |w| >= 1.
///
inline Complex phi_hat(double w)
{
    const double a = std::abs(w);
    if (!(a < 1.0)) {
        return {};
    }
    const Complex lobes = (1.0 - a) * (unit_phase(-a) + unit_phase(-2.0 * a));
    const Complex edge  = (1.0 - unit_phase(-3.0 * a)) / Complex(0.0, 3.0 * pi);
    const Complex v     = lobes + edge;
    return w < 0.0 ? std::conj(v) : v;
}

/// phi_hat(0) - |phi_hat(w)|, defined for |w| <= 1.
inline double phi_hat_gap(double w)
{
    if (!(std::abs(w) <= 1.0)) {
        throw DomainError("phi_hat_gap needs |w| <= 1");
    }
    return 2.0 - std::abs(phi_hat(w));
}

///
/// phi dilated to N samples: phi_N(x) = phi(3x / (N+1)) <= chi_[0, N+1], with
/// transform (N+1)/3 phi_hat((N+1) w / 3) supported in [-3/(N+1), 3/(N+1)].
///
class DilatedLocalizer {
public:
    explicit DilatedLocalizer(std::int64_t n) : n_(n)
    {
        if (n < 1) {
            throw InvalidArgument("dilation parameter must be >= 1");
        }
    }

    std::int64_t n_param() const noexcept { return n_; }

    /// 3 / (N+1)
    double support_radius() const noexcept { return 3.0 / static_cast<double>(n_ + 1); }

    double operator()(double x) const { return phi(3.0 * x / static_cast<double>(n_ + 1)); }

    Complex hat(double w) const
    {
        const double m = static_cast<double>(n_ + 1);
        return (m / 3.0) * phi_hat(m * w / 3.0);
    }

private:
    std::int64_t n_;
};

inline double phi_dilated(const DilatedLocalizer& loc, double x) { return loc(x); }

inline Complex phi_hat_dilated(const DilatedLocalizer& loc, double w) { return loc.hat(w); }

///
/// Arg phi_hat_N(w), the modulation phase of a close pair at offset w.
/// Zero at w = 0, where the transform is real and positive.
///
inline double phase_theta(const DilatedLocalizer& loc, double w)
{
    if (w == 0.0) {
        return 0.0;
    }
    if (!(std::abs(w) < loc.support_radius())) {
        throw DomainError("phase_theta needs 0 < |w| < 3/(N+1)");
    }
    return std::arg(loc.hat(w));
}

///
/// Hermite interpolation from finitely many integer nodes. Integers that are
/// not nodes evaluate to zero.
///
inline double jagerman_fogel_eval(std::span<const HermiteNode> nodes, double x)
{
    std::set<std::int64_t> seen;
    const detail::NodalFactor f(x);
    double acc = 0.0;
    for (const auto& n : nodes) {
        if (!seen.insert(n.node).second) {
            throw InvalidArgument("Hermite node " + std::to_string(n.node) + " given twice");
        }
        const double q = f.over(n.node);
        acc += n.value * q * q + n.derivative * f.s * q;
    }
    return acc;
}

} // namespace hcert

#endif
