// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The harmonic-certify Authors

///
/// \file estimation.hpp
///
/// ESPRIT frequency estimation from equispaced samples and least-squares
/// recovery of the coefficients on the sampling grid.
///
/// #### Algorithm
///
/// For samples h_0..h_{L-1} and window w, the Hankel matrix
/// H[r, c] = h_{r+c} is (L - w + 1) x w. For an exact M-term sum its column
/// space is spanned by (z_m^r)_r with z_m = exp(2 pi i y_m). With U the M
/// dominant left singular vectors, the shift relation U_down = U_up Psi is
/// solved in the least-squares sense (U_up drops the last row, U_down the
/// first) and the eigenvalues of Psi are the z_m.
///
#ifndef HCERT_ESTIMATION_HPP
#define HCERT_ESTIMATION_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "error.hpp"
#include "torus.hpp"

namespace hcert {

/// floor((L+1)/2), a square-ish Hankel matrix.
inline std::size_t default_window(std::size_t length) { return (length + 1) / 2; }

///
/// Frequencies of an `order`-term model, reduced to [0,1) and sorted.
/// Requires order <= window <= L - order so that both the Hankel matrix and
/// its shifted row blocks have at least `order` rows.
///
inline std::vector<Frequency> esprit(std::span<const Complex> samples, std::size_t order,
                                     std::optional<std::size_t> window = std::nullopt)
{
    const std::size_t length = samples.size();
    const std::size_t w      = window.value_or(default_window(length));
    if (order < 1) {
        throw PreconditionViolated("model order must be >= 1");
    }
    if (w < order || w + order > length) {
        throw PreconditionViolated("ESPRIT needs order <= window <= L - order");
    }

    const auto rows = static_cast<Eigen::Index>(length - w + 1);
    const auto cols = static_cast<Eigen::Index>(w);
    const auto m    = static_cast<Eigen::Index>(order);
    Eigen::MatrixXcd hankel(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            hankel(r, c) = samples[static_cast<std::size_t>(r + c)];
        }
    }

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(hankel, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    if (!(s(0) > 0.0) || s(m - 1) < 1e-12 * s(0)) {
        throw RankDeficient("Hankel matrix has rank below the model order");
    }
    const Eigen::MatrixXcd u     = svd.matrixU().leftCols(m);
    const Eigen::MatrixXcd upper = u.topRows(rows - 1);
    const Eigen::MatrixXcd lower = u.bottomRows(rows - 1);
    const Eigen::MatrixXcd psi   = upper.colPivHouseholderQr().solve(lower);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(psi, false);
    if (es.info() != Eigen::Success) {
        throw ConvergenceFailure("eigenvalues of the shift operator did not converge");
    }
    std::vector<Frequency> out;
    out.reserve(order);
    for (Eigen::Index i = 0; i < m; ++i) {
        out.emplace_back(std::arg(es.eigenvalues()(i)) / two_pi);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct LeastSquaresFit {
    std::vector<Complex> coefficients;
    double residual_norm = 0.0;
    double gram_condition = 0.0; ///< cond(V^H V) = cond(V)^2
    bool ill_conditioned = false;
};

/// Gram condition number above which a fit is flagged.
inline constexpr double ill_conditioned_limit = 1e12;

/// argmin_c ||V c - samples||_2 with V[k, j] = exp(2 pi i y_j k), k on `grid`.
inline LeastSquaresFit least_squares_coefficients(std::span<const Complex> samples,
                                                  const SampleGrid& grid,
                                                  std::span<const Frequency> frequencies)
{
    if (samples.size() != grid.size()) {
        throw InvalidArgument("sample count does not match the grid");
    }
    if (frequencies.size() > grid.size()) {
        throw PreconditionViolated("more frequencies than grid points");
    }
    for (std::size_t i = 0; i < frequencies.size(); ++i) {
        for (std::size_t j = i + 1; j < frequencies.size(); ++j) {
            if (frequencies[i] == frequencies[j]) {
                throw DuplicateFrequency("duplicate frequency in least-squares fit");
            }
        }
    }

    const auto rows = static_cast<Eigen::Index>(grid.size());
    const auto cols = static_cast<Eigen::Index>(frequencies.size());
    Eigen::MatrixXcd v(rows, cols);
    Eigen::VectorXcd b(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const double k = static_cast<double>(grid.start() + r);
        b(r) = samples[static_cast<std::size_t>(r)];
        for (Eigen::Index j = 0; j < cols; ++j) {
            v(r, j) = unit_phase(frequencies[static_cast<std::size_t>(j)].value() * k);
        }
    }

    LeastSquaresFit fit;
    if (cols == 0) {
        fit.residual_norm = b.norm();
        return fit;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXcd c = svd.solve(b);
    const auto& s            = svd.singularValues();
    const double smin        = s(s.size() - 1);
    fit.gram_condition  = smin > 0.0 ? (s(0) / smin) * (s(0) / smin) : HUGE_VAL;
    fit.ill_conditioned = fit.gram_condition > ill_conditioned_limit;
    fit.coefficients.assign(c.data(), c.data() + c.size());
    fit.residual_norm = (v * c - b).norm();
    return fit;
}

struct EstimationResult {
    std::vector<Frequency> frequencies;
    std::vector<Complex> coefficients;
    double residual_norm = 0.0;
    bool ill_conditioned = false;
    /// The fitted sum without terms of modulus below 1e-14.
    ExponentialSum sum;
};

inline EstimationResult estimate(std::span<const Complex> samples, const SampleGrid& grid,
                                 std::size_t order, std::optional<std::size_t> window = std::nullopt)
{
    EstimationResult r;
    r.frequencies = esprit(samples, order, window);
    auto fit      = least_squares_coefficients(samples, grid, r.frequencies);
    r.coefficients    = std::move(fit.coefficients);
    r.residual_norm   = fit.residual_norm;
    r.ill_conditioned = fit.ill_conditioned;

    std::vector<Term> kept;
    for (std::size_t i = 0; i < r.frequencies.size(); ++i) {
        if (std::abs(r.coefficients[i]) >= 1e-14) {
            kept.push_back({r.frequencies[i], r.coefficients[i]});
        }
    }
    r.sum = ExponentialSum(std::move(kept));
    return r;
}

} // namespace hcert

#endif
