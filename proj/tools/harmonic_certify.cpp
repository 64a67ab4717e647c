// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The harmonic-certify Authors

// harmonic-certify: command line front end for the bounds, estimators and
// experiment drivers. Exit status is 0 when every checked inequality holds,
// 1 when some inequality is violated and 2 on invalid input or other errors.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hcert/hcert.hpp"

namespace fs = std::filesystem;
using namespace hcert;

namespace {

struct Globals {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<unsigned> threads;
};

ExperimentConfig load_config(const std::string& path, ExperimentKind kind, const Globals& g)
{
    Json j = path.empty() ? Json::object() : read_json_file(path);
    if (!j.contains("experiment")) {
        j["experiment"] = to_string(kind);
    }
    auto cfg = config_from_json(j);
    if (g.seed) cfg.seed = *g.seed;
    if (g.trials) cfg.trials = *g.trials;
    if (g.threads) cfg.threads = *g.threads;
    if (cfg.trials < 1) {
        throw InvalidArgument("trials must be >= 1");
    }
    return cfg;
}

fs::path prepare_dir(const std::string& out)
{
    fs::path dir(out.empty() ? "." : out);
    fs::create_directories(dir);
    return dir;
}

void emit(const std::string& path, const std::string& content)
{
    if (path.empty() || path == "-") {
        std::cout << content;
    } else {
        write_file(path, content);
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// a:b:n -> n equispaced points from a to b inclusive
std::vector<double> parse_grid(const std::string& spec)
{
    const auto p1 = spec.find(':');
    const auto p2 = spec.find(':', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos) {
        throw InvalidArgument("grid must be a:b:n");
    }
    const double a = std::stod(spec.substr(0, p1));
    const double b = std::stod(spec.substr(p1 + 1, p2 - p1 - 1));
    const long n   = std::stol(spec.substr(p2 + 1));
    if (n < 1) {
        throw InvalidArgument("grid needs at least one point");
    }
    std::vector<double> out;
    for (long i = 0; i < n; ++i) {
        out.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    return out;
}

std::int64_t symmetric_n(const SampleGrid& grid)
{
    if (grid.start() != -grid.end()) {
        throw InvalidArgument("samples must lie on a grid -N..N");
    }
    return grid.end();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Stability certificates for sparse frequency estimation"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Base seed of all random streams");
    app.add_option("--trials", g.trials, "Trials per sigma")->check(CLI::PositiveNumber);
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);

    int status = 0;

    // figure1
    std::string config, out;
    auto* fig = app.add_subcommand("figure1", "Noisy estimation study with a posteriori certificates");
    fig->add_option("--config", config, "Experiment JSON");
    fig->add_option("--out", out, "Output directory");
    fig->callback([&] {
        const auto cfg = load_config(config, ExperimentKind::Figure1, g);
        const auto dir = prepare_dir(out);
        const auto r   = run_figure1(cfg);
        write_file((dir / "figure1.csv").string(), figure1_csv(r));
        write_file((dir / "figure1_trials.csv").string(), trials_csv(r));
        write_file((dir / "config.json").string(), dump(to_json(cfg)));
        std::size_t violations = 0;
        for (const auto& row : r.rows) violations += row.violations;
        std::cout << figure1_csv(r);
        status = violations ? 1 : 0;
    });

    // sharpness
    auto* sharp = app.add_subcommand("sharpness", "Pair bound against 1 - exp(2 pi i tau x)");
    sharp->add_option("--config", config, "Experiment JSON");
    sharp->add_option("--out", out, "Output directory");
    sharp->callback([&] {
        const auto cfg  = load_config(config, ExperimentKind::Sharpness, g);
        const auto dir  = prepare_dir(out);
        const auto rows = run_sharpness(cfg);
        write_file((dir / "sharpness.csv").string(), sharpness_csv(rows));
        std::cout << sharpness_csv(rows);
        for (const auto& r : rows) {
            if (!r.holds) status = 1;
        }
    });

    // vandermonde verify
    std::string mode = "separated", csv_out;
    auto* vand   = app.add_subcommand("vandermonde", "Smallest singular values of Vandermonde matrices");
    auto* verify = vand->add_subcommand("verify", "Compare sigma_min^2 with the lower bound");
    vand->require_subcommand(1);
    verify->add_option("--mode", mode, "separated | pairs")->check(CLI::IsMember({"separated", "pairs"}));
    verify->add_option("--config", config, "Scenario or sweep JSON");
    verify->add_option("--out", csv_out, "CSV output (stdout if omitted)");
    verify->callback([&] {
        const bool pairs = mode == "pairs";
        std::vector<SigmaReport> reports;
        const Json j = config.empty() ? Json::object() : read_json_file(config);
        if (j.contains("nodes")) {
            auto s    = scenario_from_json(j);
            const VandermondeSpec y{s.nodes, s.n};
            reports.push_back(pairs ? verify_pairs(y, {s.second_nodes, s.n}, s.q) : verify_separated(y, s.q));
        } else {
            reports = run_vandermonde_sweep(load_config(config, ExperimentKind::VandermondeSweep, g), pairs);
        }
        emit(csv_out, sigma_csv(reports));
        for (const auto& r : reports) {
            if (!r.holds) status = 1;
        }
    });

    // bounds check / suite
    std::string json_out;
    auto* bounds = app.add_subcommand("bounds", "Inequality checks");
    bounds->require_subcommand(1);
    auto* check = bounds->add_subcommand("check", "Evaluate one scenario");
    check->add_option("--config", config, "Scenario JSON")->required();
    check->add_option("--json", json_out, "Report JSON output (stdout if omitted)");
    check->add_option("--csv", csv_out, "One-row CSV output (stdout if omitted)");
    check->callback([&] {
        const auto r = evaluate_scenario(scenario_from_json(read_json_file(config)));
        emit(json_out, dump(to_json(r)));
        emit(csv_out, bound_csv(r));
        status = r.holds ? 0 : 1;
    });
    auto* suite = bounds->add_subcommand("suite", "Randomized suite over all theorems");
    suite->add_option("--config", config, "Experiment JSON");
    suite->add_option("--out", out, "Output directory");
    suite->callback([&] {
        const auto cfg = load_config(config, ExperimentKind::BoundSuite, g);
        const auto dir = prepare_dir(out);
        const auto sum = run_bound_suite(cfg);
        Json failures  = Json::array();
        for (std::size_t i = 0; i < sum.failures.size(); ++i) {
            const auto name = "reproducer_" + std::to_string(i) + ".json";
            write_file((dir / name).string(), dump(sum.failures[i].reproducer));
            failures.push_back(Json{{"file", name}, {"message", sum.failures[i].message}});
        }
        const Json summary{{"total", sum.total}, {"passed", sum.passed}, {"failed", sum.failed},
                           {"failures", failures}};
        write_file((dir / "summary.json").string(), dump(summary));
        std::cout << dump(summary);
        status = sum.failed ? 1 : 0;
    });

    // phi eval
    std::string grid_spec;
    std::optional<std::int64_t> dilate;
    bool fourier = false;
    auto* phi_cmd = app.add_subcommand("phi", "Localizing function");
    phi_cmd->require_subcommand(1);
    auto* eval = phi_cmd->add_subcommand("eval", "Tabulate phi or its Fourier transform");
    eval->add_option("--grid", grid_spec, "a:b:n")->required();
    eval->add_option("--dilate", dilate, "Dilation for N samples")->check(CLI::PositiveNumber);
    eval->add_flag("--fourier", fourier, "Tabulate the Fourier transform");
    eval->add_option("--out", csv_out, "CSV output (stdout if omitted)");
    eval->callback([&] {
        CsvWriter w({fourier ? "w" : "x", "value_re", "value_im"});
        std::optional<DilatedLocalizer> loc;
        if (dilate) loc.emplace(*dilate);
        for (double x : parse_grid(grid_spec)) {
            const Complex v = fourier ? (loc ? loc->hat(x) : phi_hat(x)) : Complex(loc ? (*loc)(x) : phi(x));
            w.row({cell(x), cell(v.real()), cell(v.imag())});
        }
        emit(csv_out, w.str());
    });

    // estimate
    std::string in_path;
    std::size_t order = 1;
    std::optional<std::size_t> window;
    auto* est = app.add_subcommand("estimate", "ESPRIT plus least-squares coefficients");
    est->add_option("--in", in_path, "Samples JSON")->required();
    est->add_option("--order", order, "Model order")->required()->check(CLI::PositiveNumber);
    est->add_option("--window", window, "Hankel window");
    est->add_option("--out", json_out, "Sum JSON output (stdout if omitted)");
    est->callback([&] {
        const auto s = samples_from_json(read_json_file(in_path));
        const auto r = estimate(s.values, s.grid, order, window);
        emit(json_out, dump(to_json(r.sum)));
        if (r.ill_conditioned) {
            std::cerr << "warning: ill-conditioned coefficient fit\n";
        }
    });

    // apost
    std::string samples_path, estimate_path, truth_path;
    double sigma = 0.0, delta = 0.9;
    std::optional<double> q;
    auto* apost = app.add_subcommand("apost", "A posteriori certificate for an estimate");
    apost->add_option("--samples", samples_path, "Noisy samples JSON on -N..N")->required();
    apost->add_option("--estimate", estimate_path, "Estimated sum JSON")->required();
    apost->add_option("--sigma", sigma, "Noise level per component")->required();
    apost->add_option("--delta", delta, "Confidence exponent in (0, 1)");
    apost->add_option("--q", q, "Separation parameter (default 3/(2N+2))");
    apost->add_option("--truth", truth_path, "Ground truth sum JSON (experiment mode)");
    apost->add_option("--out", json_out, "Certificate JSON output (stdout if omitted)");
    apost->callback([&] {
        const auto s = samples_from_json(read_json_file(samples_path));
        const auto n = symmetric_n(s.grid);
        const auto e = sum_from_json(read_json_file(estimate_path));
        std::optional<ExponentialSum> truth;
        if (!truth_path.empty()) truth = sum_from_json(read_json_file(truth_path));
        const auto c = apost_certificate(s.values, e, n, sigma, delta, q.value_or(wellposedness_threshold(n)),
                                         truth ? &*truth : nullptr);
        emit(json_out, dump(to_json(c)));
        if (c.final_estimate_holds && !*c.final_estimate_holds) status = 1;
    });

    // sample
    std::string sum_path;
    std::int64_t n_samples = 20;
    std::optional<double> noise_sigma;
    std::uint64_t stream = 0;
    auto* smp = app.add_subcommand("sample", "Samples of a sum on -N..N, optionally with noise");
    smp->add_option("--sum", sum_path, "Sum JSON")->required();
    smp->add_option("--N", n_samples, "Half-width of the grid")->check(CLI::PositiveNumber);
    smp->add_option("--sigma", noise_sigma, "Noise level per component");
    smp->add_option("--stream", stream, "Noise stream index");
    smp->add_option("--out", json_out, "Samples JSON output (stdout if omitted)");
    smp->callback([&] {
        const auto f = sum_from_json(read_json_file(sum_path));
        SampleSet s{SampleGrid::symmetric(n_samples), {}};
        s.values = sample(f, s.grid);
        if (noise_sigma) {
            const auto eta = sample_noise(NoiseModel(*noise_sigma, g.seed.value_or(1)), s.values.size(), stream);
            for (std::size_t i = 0; i < eta.size(); ++i) s.values[i] += eta[i];
        }
        emit(json_out, dump(to_json(s)));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return status;
}
