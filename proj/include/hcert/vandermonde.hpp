// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The harmonic-certify Authors

///
/// \file vandermonde.hpp
///
/// V_N(y_1..y_M) with entries exp(2 pi i k y_j), k = 0..N-1, its smallest
/// singular value, and the comparison against the separated and
/// pairwise-colliding lower bounds from bounds.hpp.
///
#ifndef HCERT_VANDERMONDE_HPP
#define HCERT_VANDERMONDE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bounds.hpp"
#include "error.hpp"
#include "torus.hpp"

namespace hcert {

struct VandermondeSpec {
    std::vector<Frequency> frequencies;
    std::int64_t rows = 0;
};

inline Eigen::MatrixXcd build(const VandermondeSpec& spec)
{
    if (spec.rows < 1) {
        throw InvalidArgument("Vandermonde matrix needs at least one row");
    }
    const auto& ys = spec.frequencies;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        for (std::size_t j = i + 1; j < ys.size(); ++j) {
            if (ys[i] == ys[j]) {
                throw DuplicateFrequency("duplicate Vandermonde node " + std::to_string(ys[i].value()));
            }
        }
    }
    const auto cols = static_cast<Eigen::Index>(ys.size());
    Eigen::MatrixXcd v(spec.rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        const double y = ys[static_cast<std::size_t>(j)].value();
        for (Eigen::Index k = 0; k < spec.rows; ++k) {
            v(k, j) = unit_phase(y * static_cast<double>(k));
        }
    }
    return v;
}

enum class SigmaMethod { Gram, Dense };

struct SigmaMin {
    double value = 0.0;
    Eigen::VectorXcd right_vector; ///< unit right singular vector
};

/// Smallest singular value from a full SVD of the matrix itself.
inline SigmaMin sigma_min_dense(const Eigen::MatrixXcd& a)
{
    if (a.size() == 0) {
        throw InvalidArgument("sigma_min of an empty matrix");
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const Eigen::Index last = s.size() - 1;
    return {s(last), svd.matrixV().col(last)};
}

///
/// Smallest of the min(rows, cols) singular values. The Gram path
/// diagonalizes A^H A, which is M x M and cheap when M << N; wide matrices
/// always take the dense path.
///
inline SigmaMin sigma_min_detail(const Eigen::MatrixXcd& a, SigmaMethod method = SigmaMethod::Gram)
{
    if (a.size() == 0) {
        throw InvalidArgument("sigma_min of an empty matrix");
    }
    if (method == SigmaMethod::Dense || a.cols() > a.rows()) {
        return sigma_min_dense(a);
    }
    const Eigen::MatrixXcd gram = a.adjoint() * a;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    if (es.info() != Eigen::Success) {
        throw ConvergenceFailure("Gram eigen-decomposition did not converge");
    }
    return {std::sqrt(std::max(0.0, es.eigenvalues()(0))), es.eigenvectors().col(0)};
}

inline double sigma_min(const Eigen::MatrixXcd& a, SigmaMethod method = SigmaMethod::Gram)
{
    return sigma_min_detail(a, method).value;
}

enum class BoundKind { Separated, Pairs };

inline std::string to_string(BoundKind k) { return k == BoundKind::Separated ? "separated" : "pairs"; }

/// Relative slack for singular-value bounds.
inline constexpr double sigma_tolerance = 1e-9;

struct SigmaReport {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    double q = 0.0;
    double tau = 0.0; ///< Pairs only
    double sigma_min = 0.0;
    double sigma_min_squared = 0.0;
    double bound = 0.0;
    double ratio = 0.0; ///< sigma_min^2 / bound, +inf for a vacuous bound
    BoundKind bound_kind = BoundKind::Separated;
    bool holds = false;
    /// |<v_min, (e_y - e_n(y)) / sqrt 2>| for the closest pair (Pairs only).
    std::optional<double> pair_alignment;
};

namespace detail {

inline SigmaMin robust_sigma_min(const Eigen::MatrixXcd& v)
{
    try {
        return sigma_min_detail(v, SigmaMethod::Gram);
    } catch (const ConvergenceFailure&) {
        return sigma_min_dense(v);
    }
}

inline void finish(SigmaReport& r, const SigmaMin& s)
{
    r.sigma_min         = s.value;
    r.sigma_min_squared = s.value * s.value;
    r.ratio = r.bound > 0.0 ? r.sigma_min_squared / r.bound : std::numeric_limits<double>::infinity();
    r.holds = within_tolerance(r.sigma_min_squared - r.bound, r.sigma_min_squared, sigma_tolerance);
}

} // namespace detail

inline SigmaReport verify_separated(const VandermondeSpec& spec, double q)
{
    if (separation(spec.frequencies) < q) {
        throw PreconditionViolated("nodes are not q-separated");
    }
    const auto v = build(spec);
    SigmaReport r;
    r.rows       = spec.rows;
    r.cols       = static_cast<std::int64_t>(spec.frequencies.size());
    r.q          = q;
    r.bound      = vandermonde_bound_separated(spec.rows, q);
    r.bound_kind = BoundKind::Separated;
    detail::finish(r, detail::robust_sigma_min(v));
    return r;
}

///
/// Nodes Y followed by Y'. Each set q-separated, q >= 3/(N+1), and every node
/// has at most one node of the other set closer than q.
///
inline SigmaReport verify_pairs(const VandermondeSpec& y, const VandermondeSpec& yp, double q)
{
    if (y.rows != yp.rows) {
        throw InvalidArgument("both node sets need the same row count");
    }
    const std::int64_t n = y.rows;
    if (q < main_bound_threshold(n)) {
        throw PreconditionViolated("pairs bound needs q >= 3/(N+1)");
    }
    if (separation(y.frequencies) < q || separation(yp.frequencies) < q) {
        throw PreconditionViolated("both node sets must be q-separated");
    }
    try {
        (void)match_partition(y.frequencies, yp.frequencies, q);
    } catch (const AmbiguousMatch& e) {
        throw PreconditionViolated(e.what());
    }

    VandermondeSpec joint{y.frequencies, n};
    joint.frequencies.insert(joint.frequencies.end(), yp.frequencies.begin(), yp.frequencies.end());
    const auto v = build(joint);

    SigmaReport r;
    r.rows       = n;
    r.cols       = static_cast<std::int64_t>(joint.frequencies.size());
    r.q          = q;
    r.tau        = set_distance(y.frequencies, yp.frequencies);
    r.bound      = vandermonde_bound_pairs(n, q, r.tau);
    r.bound_kind = BoundKind::Pairs;
    const auto s = detail::robust_sigma_min(v);
    detail::finish(r, s);

    // closest pair diagnostic
    const auto m = y.frequencies.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < yp.frequencies.size(); ++j) {
            if (wrap_distance(y.frequencies[i], yp.frequencies[j]) == r.tau) {
                const auto a = static_cast<Eigen::Index>(i);
                const auto b = static_cast<Eigen::Index>(m + j);
                r.pair_alignment = std::abs(s.right_vector(a) - s.right_vector(b)) / std::sqrt(2.0);
                return r;
            }
        }
    }
    return r;
}

} // namespace hcert

#endif
