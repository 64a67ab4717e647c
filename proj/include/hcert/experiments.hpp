// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The harmonic-certify Authors

///
/// \file experiments.hpp
///
/// Experiment drivers behind the command line tool: the noisy-estimation
/// study (ESPRIT estimate plus a posteriori certificate over a sigma sweep),
/// the sharpness sweep of the pair bound, randomized Vandermonde sweeps and
/// the randomized bound suite with replayable reproducers.
///
/// Every trial owns the random stream (seed, trial index), and results are
/// collected by index, so the output does not depend on the thread count.
///
#ifndef HCERT_EXPERIMENTS_HPP
#define HCERT_EXPERIMENTS_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "estimation.hpp"
#include "io.hpp"
#include "noise.hpp"
#include "random_configs.hpp"
#include "torus.hpp"
#include "vandermonde.hpp"

namespace hcert {

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
inline void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, count))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                fn(i);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
}

/// Frequencies {0.1, 0.3, 0.6, 0.9} with coefficients [1.1, -1.1, 2, 2].
inline ExponentialSum example_sum()
{
    const double fr[] = {0.1, 0.3, 0.6, 0.9};
    const Complex co[] = {1.1, -1.1, 2.0, 2.0};
    return ExponentialSum(fr, co);
}

inline std::vector<double> default_sigma_grid() { return {1e-3, 3e-3, 1e-2, 3e-2, 1e-1, 3e-1, 1.0}; }

enum class ExperimentKind { Figure1, Sharpness, VandermondeSweep, BoundSuite };

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::Figure1;
    std::uint64_t seed = 1;
    std::size_t trials = 50;
    unsigned threads = 1;

    // noisy estimation
    std::vector<double> sigma_grid = default_sigma_grid();
    std::int64_t n = 20;
    double delta = 0.9;
    std::optional<double> q;           ///< defaults to 3/(2N+2)
    std::optional<std::size_t> order;  ///< defaults to the model size
    std::optional<std::size_t> window; ///< ESPRIT window, defaults to floor((L+1)/2)
    ExponentialSum model = example_sum();

    // sharpness
    std::vector<double> tau_grid = {1e-3, 1e-4, 1e-5};
    std::vector<std::int64_t> n_list = {20};

    // randomized suites
    std::size_t configs = 1000;
    std::vector<std::int64_t> suite_n = {10, 20, 50};
    double perturb = 1.0; ///< lower bounds times perturb, upper bounds divided by it
};

inline std::string to_string(ExperimentKind k)
{
    switch (k) {
    case ExperimentKind::Figure1: return "figure1";
    case ExperimentKind::Sharpness: return "sharpness";
    case ExperimentKind::VandermondeSweep: return "vandermonde_sweep";
    case ExperimentKind::BoundSuite: return "bound_suite";
    }
    return "?";
}

inline ExperimentConfig config_from_json(const Json& j)
{
    ExperimentConfig c;
    if (j.contains("experiment")) {
        const auto e = j.at("experiment").get<std::string>();
        if (e == "figure1") c.experiment = ExperimentKind::Figure1;
        else if (e == "sharpness") c.experiment = ExperimentKind::Sharpness;
        else if (e == "vandermonde_sweep") c.experiment = ExperimentKind::VandermondeSweep;
        else if (e == "bound_suite") c.experiment = ExperimentKind::BoundSuite;
        else throw InvalidArgument("unknown experiment '" + e + "'");
    }
    auto get = [&](const char* key, auto& dst) {
        if (j.contains(key)) {
            dst = j.at(key).get<std::decay_t<decltype(dst)>>();
        }
    };
    get("seed", c.seed);
    get("trials", c.trials);
    get("threads", c.threads);
    get("sigma_grid", c.sigma_grid);
    get("N", c.n);
    get("delta", c.delta);
    get("tau_grid", c.tau_grid);
    get("n_list", c.n_list);
    get("configs", c.configs);
    get("suite_N", c.suite_n);
    get("perturb", c.perturb);
    if (j.contains("q")) c.q = j.at("q").get<double>();
    if (j.contains("order")) c.order = j.at("order").get<std::size_t>();
    if (j.contains("esprit") && j.at("esprit").contains("window")) {
        c.window = j.at("esprit").at("window").get<std::size_t>();
    }
    if (j.contains("model")) c.model = sum_from_json(j.at("model"));

    if (c.trials < 1) {
        throw InvalidArgument("trials must be >= 1");
    }
    if (c.experiment == ExperimentKind::Figure1 && c.sigma_grid.empty()) {
        throw InvalidArgument("sigma_grid must not be empty");
    }
    return c;
}

inline Json to_json(const ExperimentConfig& c)
{
    Json j{{"experiment", to_string(c.experiment)},
           {"seed", c.seed},
           {"trials", c.trials},
           {"sigma_grid", c.sigma_grid},
           {"N", c.n},
           {"delta", c.delta},
           {"q", c.q ? *c.q : wellposedness_threshold(c.n)},
           {"order", c.order ? *c.order : c.model.size()},
           {"esprit", Json{{"window", c.window ? *c.window : default_window(static_cast<std::size_t>(2 * c.n + 1))}}},
           {"model", to_json(c.model)},
           {"tau_grid", c.tau_grid},
           {"n_list", c.n_list},
           {"configs", c.configs},
           {"suite_N", c.suite_n},
           {"perturb", c.perturb}};
    return j;
}

// ---------------------------------------------------------------------------
// Noisy estimation study
// ---------------------------------------------------------------------------

struct TrialRecord {
    double sigma = 0.0;
    std::size_t sigma_index = 0;
    std::size_t seed_index = 0;
    std::string status = "ok"; ///< ok | model_violation | estimation_failed
    std::optional<double> sampling_distance; ///< ||f - f_est||^2 on the grid
    std::optional<double> error;             ///< weighted frequency/coefficient error
    std::optional<double> estimator;
    bool premise_ok = false;
    std::optional<bool> lemma_event_ok;
    std::optional<bool> apost_holds; ///< error <= estimator^2
    bool violation = false;          ///< certified, yet the error bound failed
};

struct Figure1Row {
    double sigma = 0.0;
    std::size_t trials = 0;
    std::size_t certified = 0;
    std::optional<double> max_error;
    std::optional<double> max_estimator;
    std::optional<double> max_sampling_distance;
    std::optional<double> median_error;
    std::optional<double> median_estimator;
    std::size_t violations = 0;

    double certified_fraction() const { return static_cast<double>(certified) / static_cast<double>(trials); }
};

struct Figure1Result {
    std::vector<TrialRecord> trials;
    std::vector<Figure1Row> rows;
};

inline std::optional<double> median(std::vector<double> v)
{
    if (v.empty()) {
        return std::nullopt;
    }
    std::sort(v.begin(), v.end());
    const auto m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

inline std::optional<double> maximum(const std::vector<double>& v)
{
    if (v.empty()) {
        return std::nullopt;
    }
    return *std::max_element(v.begin(), v.end());
}

/// One trial: noise, ESPRIT, least squares, certificate against the truth.
inline TrialRecord run_estimation_trial(const ExperimentConfig& cfg, std::size_t sigma_index,
                                        std::size_t trial)
{
    TrialRecord rec;
    rec.sigma       = cfg.sigma_grid[sigma_index];
    rec.sigma_index = sigma_index;
    rec.seed_index  = trial;

    const auto grid  = SampleGrid::symmetric(cfg.n);
    const auto clean = sample(cfg.model, grid);
    const NoiseModel noise(rec.sigma, cfg.seed);
    const auto eta = sample_noise(noise, grid.size(), (static_cast<std::uint64_t>(sigma_index) << 32) | trial);
    std::vector<Complex> noisy(clean.size());
    for (std::size_t i = 0; i < noisy.size(); ++i) {
        noisy[i] = clean[i] + eta[i];
    }

    EstimationResult est;
    try {
        est = estimate(noisy, grid, cfg.order.value_or(cfg.model.size()), cfg.window);
    } catch (const Error&) {
        rec.status = "estimation_failed";
        return rec;
    }
    const auto gs          = sample(est.sum, grid);
    rec.sampling_distance  = squared_distance(clean, gs);
    rec.estimator = gauss_norm_estimator(squared_distance(noisy, gs), static_cast<std::int64_t>(grid.size()),
                                         rec.sigma, cfg.delta);
    rec.lemma_event_ok = std::sqrt(*rec.sampling_distance) <= *rec.estimator;

    try {
        const auto cert = apost_certificate(noisy, est.sum, cfg.n, rec.sigma, cfg.delta,
                                            cfg.q.value_or(wellposedness_threshold(cfg.n)), &cfg.model);
        rec.premise_ok  = cert.verdict == Verdict::Certified;
        rec.error       = cert.weighted_error;
        rec.apost_holds = cert.final_estimate_holds;
        rec.violation   = rec.premise_ok && (cert.matching_failed || !cert.final_estimate_holds.value_or(false));
    } catch (const ModelViolation&) {
        rec.status = "model_violation";
    }
    return rec;
}

inline Figure1Result run_figure1(const ExperimentConfig& cfg)
{
    const std::size_t per = cfg.trials;
    Figure1Result out;
    out.trials.resize(cfg.sigma_grid.size() * per);
    parallel_for(out.trials.size(), cfg.threads,
                 [&](std::size_t i) { out.trials[i] = run_estimation_trial(cfg, i / per, i % per); });

    for (std::size_t s = 0; s < cfg.sigma_grid.size(); ++s) {
        Figure1Row row;
        row.sigma  = cfg.sigma_grid[s];
        row.trials = per;
        std::vector<double> errors, estimators, distances;
        for (std::size_t t = 0; t < per; ++t) {
            const auto& r = out.trials[s * per + t];
            if (r.premise_ok) ++row.certified;
            if (r.violation) ++row.violations;
            if (r.error) errors.push_back(*r.error);
            if (r.estimator) estimators.push_back(*r.estimator);
            if (r.sampling_distance) distances.push_back(*r.sampling_distance);
        }
        row.max_error             = maximum(errors);
        row.max_estimator         = maximum(estimators);
        row.max_sampling_distance = maximum(distances);
        row.median_error          = median(errors);
        row.median_estimator      = median(estimators);
        out.rows.push_back(row);
    }
    return out;
}

inline std::string figure1_csv(const Figure1Result& r)
{
    CsvWriter w({"sigma", "trials", "certified_fraction", "max_error", "max_estimator",
                 "max_estimator_sq", "max_sampling_distance", "median_error", "median_estimator",
                 "violations"});
    for (const auto& row : r.rows) {
        std::optional<double> sq;
        if (row.max_estimator) sq = *row.max_estimator * *row.max_estimator;
        w.row({cell(row.sigma), cell(row.trials), cell(row.certified_fraction()), cell(row.max_error),
               cell(row.max_estimator), cell(sq), cell(row.max_sampling_distance), cell(row.median_error),
               cell(row.median_estimator), cell(row.violations)});
    }
    return w.str();
}

inline std::string trials_csv(const Figure1Result& r)
{
    CsvWriter w({"sigma", "seed_index", "status", "sampling_distance", "error", "estimator",
                 "estimator_sq", "premise_ok", "lemma_event_ok", "apost_holds", "violation"});
    for (const auto& t : r.trials) {
        std::optional<double> sq;
        if (t.estimator) sq = *t.estimator * *t.estimator;
        w.row({cell(t.sigma), cell(t.seed_index), t.status, cell(t.sampling_distance), cell(t.error),
               cell(t.estimator), cell(sq), cell(t.premise_ok), cell(t.lemma_event_ok),
               cell(t.apost_holds), cell(t.violation)});
    }
    return w.str();
}

// ---------------------------------------------------------------------------
// Sharpness of the pair bound on f_tau = 1 - exp(2 pi i tau x)
// ---------------------------------------------------------------------------

struct SharpnessRow {
    double tau = 0.0;
    std::int64_t n = 0;
    double lhs_energy = 0.0;
    double rhs_weakened = 0.0;
    double ratio = 0.0;
    bool holds = false;
};

inline BoundReport sharpness_report(double tau, std::int64_t n)
{
    if (!(tau > 0.0) || Frequency(tau) == Frequency(0.0)) {
        throw InvalidArgument("tau must be a nonzero torus offset");
    }
    return check_main_bound(ExponentialSum::single(0.0, 1.0), ExponentialSum::single(tau, -1.0), n,
                            BoundVariant::Weakened);
}

inline std::vector<SharpnessRow> run_sharpness(const ExperimentConfig& cfg)
{
    std::vector<SharpnessRow> out;
    for (auto n : cfg.n_list) {
        for (double tau : cfg.tau_grid) {
            const auto r = sharpness_report(tau, n);
            out.push_back({tau, n, r.lhs, r.rhs, r.lhs / r.rhs, r.holds});
        }
    }
    return out;
}

inline std::string sharpness_csv(const std::vector<SharpnessRow>& rows)
{
    CsvWriter w({"tau", "N", "lhs_energy", "rhs_weakened", "ratio"});
    for (const auto& r : rows) {
        w.row({cell(r.tau), cell(r.n), cell(r.lhs_energy), cell(r.rhs_weakened), cell(r.ratio)});
    }
    return w.str();
}

// ---------------------------------------------------------------------------
// Replayable bound scenarios
// ---------------------------------------------------------------------------

///
/// One inequality instance in a form that survives a JSON round trip. theorem
/// is wellsep | main | wellposedness | vandermonde_separated | vandermonde_pairs.
///
struct BoundScenario {
    std::string theorem = "wellsep";
    ExponentialSum sum;
    ExponentialSum second;
    std::optional<SampleGrid> grid;
    std::int64_t n = 0;
    BoundVariant variant = BoundVariant::Modulated;
    double q = 0.0;
    std::vector<Frequency> nodes;
    std::vector<Frequency> second_nodes;
    double perturb = 1.0;
};

inline Json to_json(const BoundScenario& s)
{
    Json j{{"theorem", s.theorem}};
    if (s.theorem == "wellsep") {
        j["sum"]  = to_json(s.sum);
        j["grid"] = to_json(*s.grid);
        j["q"]    = s.q;
    } else if (s.theorem == "main") {
        j["sum"]     = to_json(s.sum);
        j["second"]  = to_json(s.second);
        j["N"]       = s.n;
        j["variant"] = to_string(s.variant);
    } else if (s.theorem == "wellposedness") {
        j["sum"]    = to_json(s.sum);
        j["second"] = to_json(s.second);
        j["N"]      = s.n;
        j["q"]      = s.q;
    } else {
        j["N"]     = s.n;
        j["q"]     = s.q;
        j["nodes"] = frequency_values(s.nodes);
        if (s.theorem == "vandermonde_pairs") {
            j["second_nodes"] = frequency_values(s.second_nodes);
        }
    }
    j["perturb"] = s.perturb;
    return j;
}

inline BoundScenario scenario_from_json(const Json& j)
{
    BoundScenario s;
    s.theorem = j.at("theorem").get<std::string>();
    if (j.contains("sum")) s.sum = sum_from_json(j.at("sum"));
    if (j.contains("second")) s.second = sum_from_json(j.at("second"));
    if (j.contains("grid")) s.grid = grid_from_json(j.at("grid"));
    if (j.contains("N")) s.n = j.at("N").get<std::int64_t>();
    if (j.contains("variant")) s.variant = parse_variant(j.at("variant").get<std::string>());
    if (j.contains("q")) s.q = j.at("q").get<double>();
    if (j.contains("nodes")) s.nodes = frequencies_from_json(j.at("nodes"));
    if (j.contains("second_nodes")) s.second_nodes = frequencies_from_json(j.at("second_nodes"));
    if (j.contains("perturb")) s.perturb = j.at("perturb").get<double>();
    if (s.theorem == "wellsep" && !s.grid) {
        throw InvalidArgument("wellsep scenario needs a grid");
    }
    return s;
}

inline BoundReport sigma_as_bound(const SigmaReport& r, double perturb)
{
    BoundReport b = make_lower_report(r.sigma_min_squared, r.bound * perturb,
                                      {{"sigma_min", r.sigma_min},
                                       {"bound", r.bound},
                                       {"q", r.q},
                                       {"tau", r.tau},
                                       {"rows", static_cast<double>(r.rows)},
                                       {"cols", static_cast<double>(r.cols)}},
                                      sigma_tolerance);
    return b;
}

/// Evaluates a scenario, tightening every bound by `perturb`.
inline BoundReport evaluate_scenario(const BoundScenario& s)
{
    const double p = s.perturb;
    if (s.theorem == "wellsep") {
        auto r         = check_wellsep(s.sum, *s.grid, s.q);
        const double lo = r.constants.at("lower_rhs") * p;
        const double up = r.constants.at("upper_rhs") / p;
        r.rhs   = lo;
        r.slack = std::min(r.lhs - lo, up - r.lhs);
        r.holds = within_tolerance(r.slack, r.lhs);
        return r;
    }
    if (s.theorem == "main") {
        auto r  = check_main_bound(s.sum, s.second, s.n, s.variant);
        r.rhs  *= p;
        r.slack = r.lhs - r.rhs;
        r.holds = within_tolerance(r.slack, r.lhs);
        return r;
    }
    if (s.theorem == "wellposedness") {
        const auto c = wellposedness_certificate(s.sum, s.second, s.n, s.q);
        const double rhs = c.weighted_error.value_or(0.0) * p;
        BoundReport r = make_lower_report(c.premise_value, rhs,
                                          {{"premise_threshold", c.premise_threshold},
                                           {"premise_holds", c.premise_holds ? 1.0 : 0.0},
                                           {"c_min", c.c_min}});
        if (!c.premise_holds) {
            r.holds = true; // nothing is claimed without the premise
        }
        return r;
    }
    if (s.theorem == "vandermonde_separated") {
        return sigma_as_bound(verify_separated({s.nodes, s.n}, s.q), p);
    }
    if (s.theorem == "vandermonde_pairs") {
        return sigma_as_bound(verify_pairs({s.nodes, s.n}, {s.second_nodes, s.n}, s.q), p);
    }
    throw InvalidArgument("unknown theorem '" + s.theorem + "'");
}

// ---------------------------------------------------------------------------
// Randomized generators shared by the suites
// ---------------------------------------------------------------------------

/// Random q-separated sum on a random grid inside [0, 100]; every tenth index
/// is the all-ones DFT sum that attains the upper bound.
inline BoundScenario random_wellsep_scenario(RandomStream& rng, std::size_t index)
{
    BoundScenario s;
    s.theorem = "wellsep";
    if (index % 10 == 9) {
        const auto a    = rng.integer(0, 20);
        const auto span = rng.integer(2, 40);
        std::vector<Term> terms;
        for (std::int64_t j = 0; j < span; ++j) {
            terms.push_back({Frequency(static_cast<double>(j) / static_cast<double>(span)), 1.0});
        }
        s.sum  = ExponentialSum(std::move(terms));
        s.grid = SampleGrid(a * span, a * span + span);
        s.q    = s.sum.separation();
        return s;
    }
    s.q                = rng.uniform(0.05, 0.4);
    const auto count   = static_cast<std::size_t>(rng.integer(1, 8));
    s.sum              = random_separated_sum(rng, count, s.q);
    const auto a       = rng.integer(0, 99);
    const auto b       = rng.integer(a + 1, 100);
    s.grid             = SampleGrid(a, b);
    return s;
}

inline std::vector<Frequency> random_separated_nodes(RandomStream& rng, std::size_t count, double q)
{
    return random_separated_sum(rng, count, q).frequencies();
}

inline BoundScenario random_vandermonde_scenario(RandomStream& rng, std::int64_t n, bool pairs)
{
    BoundScenario s;
    s.n = n;
    if (!pairs) {
        s.theorem = "vandermonde_separated";
        s.q       = rng.uniform(0.02, 0.4);
        s.nodes   = random_separated_nodes(rng, static_cast<std::size_t>(rng.integer(1, 8)), s.q);
        return s;
    }
    s.theorem      = "vandermonde_pairs";
    const double t = main_bound_threshold(n);
    s.q            = rng.uniform(t, std::max(t, 0.5));
    auto cfg       = random_pair_configuration(rng, s.q, 8);
    if (cfg.first.empty() || cfg.second.empty()) {
        // the corollary is about two node sets; fall back to a single pair
        const double y   = rng.uniform();
        const double gap = s.q * (1.0 - rng.uniform()) * (1.0 - 1e-9);
        cfg.first        = ExponentialSum::single(y, 1.0);
        cfg.second       = ExponentialSum::single(y + gap, 1.0);
    }
    s.nodes        = cfg.first.frequencies();
    s.second_nodes = cfg.second.frequencies();
    return s;
}

// ---------------------------------------------------------------------------
// Vandermonde sweep
// ---------------------------------------------------------------------------

inline std::vector<SigmaReport> run_vandermonde_sweep(const ExperimentConfig& cfg, bool pairs)
{
    std::vector<SigmaReport> out(cfg.suite_n.size() * cfg.configs);
    parallel_for(out.size(), cfg.threads, [&](std::size_t i) {
        const auto n = cfg.suite_n[i / cfg.configs];
        RandomStream rng(cfg.seed, (pairs ? 1ULL << 40 : 0ULL) | i);
        const auto s = random_vandermonde_scenario(rng, n, pairs);
        out[i] = pairs ? verify_pairs({s.nodes, n}, {s.second_nodes, n}, s.q)
                       : verify_separated({s.nodes, n}, s.q);
    });
    return out;
}

inline std::string sigma_csv(const std::vector<SigmaReport>& reports)
{
    CsvWriter w(sigma_csv_header());
    for (const auto& r : reports) {
        w.row(sigma_csv_row(r));
    }
    return w.str();
}

// ---------------------------------------------------------------------------
// Bound suite
// ---------------------------------------------------------------------------

struct SuiteFailure {
    Json reproducer;
    std::string message; ///< report summary or the error raised
};

struct BoundSuiteSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<SuiteFailure> failures;
};

/// Scenarios of configuration `index`: one well-separated sum, the three pair
/// bound variants on one configuration, and both Vandermonde corollaries.
inline std::vector<BoundScenario> suite_scenarios(const ExperimentConfig& cfg, std::size_t index)
{
    RandomStream rng(cfg.seed, index);
    const auto n = cfg.suite_n[index % cfg.suite_n.size()];
    std::vector<BoundScenario> out;
    out.push_back(random_wellsep_scenario(rng, index));

    const auto pc = random_pair_configuration(rng, main_bound_threshold(n), 16);
    for (auto v : {BoundVariant::Modulated, BoundVariant::Weakened, BoundVariant::Symmetric}) {
        BoundScenario s;
        s.theorem = "main";
        s.n       = n;
        s.variant = v;
        s.sum     = pc.first;
        s.second  = pc.second;
        if (v == BoundVariant::Symmetric && n % 2 == 0) {
            // half-integer lattice: keep every pair away from the cut at 0
            s.sum    = rotate(pc.first, -pc.gap_point);
            s.second = rotate(pc.second, -pc.gap_point);
        }
        out.push_back(std::move(s));
    }
    out.push_back(random_vandermonde_scenario(rng, n, false));
    out.push_back(random_vandermonde_scenario(rng, n, true));
    for (auto& s : out) {
        s.perturb = cfg.perturb;
    }
    return out;
}

inline BoundSuiteSummary run_bound_suite(const ExperimentConfig& cfg)
{
    std::vector<std::vector<std::optional<SuiteFailure>>> results(cfg.configs);
    parallel_for(cfg.configs, cfg.threads, [&](std::size_t i) {
        for (const auto& s : suite_scenarios(cfg, i)) {
            std::optional<SuiteFailure> f;
            try {
                const auto r = evaluate_scenario(s);
                if (!r.holds) {
                    f = SuiteFailure{to_json(s), "violated with slack " + format_number(r.slack)};
                }
            } catch (const Error& e) {
                f = SuiteFailure{to_json(s), e.what()};
            }
            results[i].push_back(std::move(f));
        }
    });
    BoundSuiteSummary sum;
    for (auto& per : results) {
        for (auto& f : per) {
            ++sum.total;
            if (f) {
                ++sum.failed;
                sum.failures.push_back(std::move(*f));
            } else {
                ++sum.passed;
            }
        }
    }
    return sum;
}

} // namespace hcert

#endif
