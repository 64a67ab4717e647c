// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The harmonic-certify Authors

///
/// \file io.hpp
///
/// JSON encodings of sums, sample files and reports, and a small CSV writer
/// whose number formatting is shortest round-trip (bit-stable output).
///
#ifndef HCERT_IO_HPP
#define HCERT_IO_HPP

#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "error.hpp"
#include "noise.hpp"
#include "torus.hpp"
#include "vandermonde.hpp"

namespace hcert {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// Shortest representation that parses back to the same double.
inline std::string format_number(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header) : columns_(header.size())
    {
        row(header);
    }

    CsvWriter& row(const std::vector<std::string>& cells)
    {
        if (cells.size() != columns_) {
            throw InvalidArgument("CSV row has the wrong number of cells");
        }
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) {
                out_ << ',';
            }
            out_ << cells[i];
        }
        out_ << '\n';
        return *this;
    }

    std::string str() const { return out_.str(); }

private:
    std::size_t columns_;
    std::ostringstream out_;
};

inline std::string cell(double v) { return format_number(v); }
inline std::string cell(std::int64_t v) { return std::to_string(v); }
inline std::string cell(std::size_t v) { return std::to_string(v); }
inline std::string cell(bool v) { return v ? "true" : "false"; }
inline std::string cell(const std::optional<double>& v) { return v ? format_number(*v) : ""; }
inline std::string cell(const std::optional<bool>& v) { return v ? cell(*v) : ""; }

inline void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw InvalidArgument("cannot write " + path);
    }
    f << content;
}

inline Json read_json_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) {
        throw InvalidArgument("cannot read " + path);
    }
    return Json::parse(f);
}

// ---------------------------------------------------------------------------
// Sums and samples
// ---------------------------------------------------------------------------

inline Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j)
{
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2) {
        throw InvalidArgument("complex values are [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

/// {"frequencies": [...], "coefficients": [[re, im], ...]}, ascending frequencies.
inline Json to_json(const ExponentialSum& f)
{
    Json fr = Json::array();
    Json co = Json::array();
    for (const auto& t : f.terms()) {
        fr.push_back(t.frequency.value());
        co.push_back(complex_to_json(t.coefficient));
    }
    return Json{{"frequencies", fr}, {"coefficients", co}};
}

inline ExponentialSum sum_from_json(const Json& j)
{
    const auto& fr = j.at("frequencies");
    const auto& co = j.at("coefficients");
    if (fr.size() != co.size()) {
        throw InvalidArgument("frequencies and coefficients differ in length");
    }
    std::vector<Term> terms;
    for (std::size_t i = 0; i < fr.size(); ++i) {
        terms.push_back({Frequency(fr[i].get<double>()), complex_from_json(co[i])});
    }
    return ExponentialSum(std::move(terms));
}

inline Json to_json(const SampleGrid& g) { return Json{{"start", g.start()}, {"end", g.end()}}; }

inline SampleGrid grid_from_json(const Json& j)
{
    return {j.at("start").get<std::int64_t>(), j.at("end").get<std::int64_t>()};
}

struct SampleSet {
    SampleGrid grid;
    std::vector<Complex> values;
};

/// {"grid": {"start": A, "end": B}, "samples": [[re, im], ...]}
inline Json to_json(const SampleSet& s)
{
    Json v = Json::array();
    for (auto z : s.values) {
        v.push_back(complex_to_json(z));
    }
    return Json{{"grid", to_json(s.grid)}, {"samples", v}};
}

inline SampleSet samples_from_json(const Json& j)
{
    SampleSet s{grid_from_json(j.at("grid")), {}};
    for (const auto& z : j.at("samples")) {
        s.values.push_back(complex_from_json(z));
    }
    if (s.values.size() != s.grid.size()) {
        throw InvalidArgument("sample count does not match the grid");
    }
    return s;
}

inline std::vector<double> frequency_values(std::span<const Frequency> ys)
{
    std::vector<double> out;
    for (auto y : ys) {
        out.push_back(y.value());
    }
    return out;
}

inline std::vector<Frequency> frequencies_from_json(const Json& j)
{
    std::vector<Frequency> out;
    for (const auto& v : j) {
        out.emplace_back(v.get<double>());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline Json to_json(const BoundReport& r)
{
    Json c = Json::object();
    for (const auto& [k, v] : r.constants) {
        c[k] = v;
    }
    return Json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"slack", r.slack}, {"holds", r.holds}, {"constants", c}};
}

inline std::string bound_csv(const BoundReport& r)
{
    CsvWriter w({"lhs", "rhs", "slack", "holds"});
    w.row({cell(r.lhs), cell(r.rhs), cell(r.slack), cell(r.holds)});
    return w.str();
}

inline Json to_json(const MatchPartition& m)
{
    Json pairs = Json::array();
    for (const auto& p : m.pairs) {
        pairs.push_back(Json::array({p.y.value(), p.partner.value()}));
    }
    Json un = Json::array();
    for (const auto& u : m.unmatched) {
        un.push_back(Json{{"frequency", u.frequency.value()},
                          {"origin", u.origin == Origin::First ? "first" : "second"}});
    }
    return Json{{"threshold", m.threshold}, {"pairs", pairs}, {"unmatched", un}};
}

inline Json to_json(const WellPosednessCertificate& c)
{
    Json j{{"premise_value", c.premise_value},
           {"premise_threshold", c.premise_threshold},
           {"premise_holds", c.premise_holds},
           {"c_min", c.c_min},
           {"matching", to_json(c.matching)},
           {"weighted_error", c.weighted_error ? Json(*c.weighted_error) : Json(nullptr)},
           {"final_estimate_holds", c.final_estimate_holds},
           {"verdict", to_string(c.verdict)}};
    return j;
}

inline Json to_json(const APosterioriCertificate& c)
{
    auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
    return Json{{"estimator", c.estimator},
                {"premise_value", c.premise_value},
                {"premise_threshold", c.premise_threshold},
                {"c_min", c.c_min},
                {"c_min_source", to_string(c.c_min_source)},
                {"noisy_residual_sq", c.noisy_residual_sq},
                {"delta", c.delta},
                {"success_probability", c.success_probability},
                {"probability_vacuous", c.probability_vacuous},
                {"verdict", to_string(c.verdict)},
                {"weighted_error", opt(c.weighted_error)},
                {"sampling_distance", opt(c.sampling_distance)},
                {"lemma_event", opt(c.lemma_event)},
                {"final_estimate_holds", opt(c.final_estimate_holds)},
                {"matching_failed", c.matching_failed}};
}

inline std::vector<std::string> sigma_csv_header()
{
    return {"N", "M", "q", "tau", "sigma_min_sq", "bound", "ratio", "holds"};
}

inline std::vector<std::string> sigma_csv_row(const SigmaReport& r)
{
    return {cell(r.rows), cell(r.cols), cell(r.q), cell(r.tau), cell(r.sigma_min_squared),
            cell(r.bound), cell(r.ratio), cell(r.holds)};
}

} // namespace hcert

#endif
