// SPDX-License-Identifier: Apache-2.0
//
// wmmse-ic: weighted MMSE transceiver design for the K-user MIMO interference channel
// Copyright (C) 2026 The wmmse-ic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "wmmse/experiment.hpp"

#include "wmmse/channel.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <span>
#include <sstream>
#include <thread>

namespace wmmse {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true)
    {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text)
{
    text = trim(text);
    T value{};
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw std::invalid_argument("invalid value '" + std::string(text) + "' for " + std::string(key));
    return value;
}

bool parse_bool(std::string_view key, std::string_view text)
{
    text = trim(text);
    if (text == "on" || text == "true" || text == "1" || text == "yes")
        return true;
    if (text == "off" || text == "false" || text == "0" || text == "no")
        return false;
    throw std::invalid_argument("invalid boolean '" + std::string(text) + "' for " + std::string(key));
}

std::vector<double> parse_list(std::string_view key, std::string_view text)
{
    std::vector<double> out;
    for (auto part : split(text, ','))
        if (!part.empty())
            out.push_back(parse_number<double>(key, part));
    return out;
}

double pairwise_sum(std::span<const double> xs)
{
    if (xs.size() <= 8)
    {
        double s = 0.0;
        for (double x : xs)
            s += x;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

constexpr std::string_view kCsvHeader =
    "snr_db,method,constraint,robust,mean_wsr,std_error,mean_iterations,clamp_count,failed_trials";

std::string format_real(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

} // namespace

std::string to_string(Method m)
{
    switch (m)
    {
    case Method::Wmmse:
        return "wmmse";
    case Method::SimpleMmse:
        return "simple_mmse";
    case Method::Gradient:
        return "gradient";
    }
    return "unknown";
}

std::string to_string(ConstraintMode c) { return c == ConstraintMode::Sum ? "sum" : "pernode"; }

Method parse_method(std::string_view name)
{
    name = trim(name);
    if (name == "wmmse")
        return Method::Wmmse;
    if (name == "simple_mmse" || name == "simple")
        return Method::SimpleMmse;
    if (name == "gradient")
        return Method::Gradient;
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

ConstraintMode parse_constraint_mode(std::string_view name)
{
    name = trim(name);
    if (name == "sum")
        return ConstraintMode::Sum;
    if (name == "pernode" || name == "per-node" || name == "ind")
        return ConstraintMode::PerNode;
    throw std::invalid_argument("unknown constraint '" + std::string(name) + "'");
}

PowerConstraint standard_constraint(ConstraintMode mode, int K)
{
    if (mode == ConstraintMode::Sum)
        return SumPower{static_cast<double>(K)};
    return PerNodePower{std::vector<double>(static_cast<std::size_t>(K), 1.0)};
}

RateWeights ExperimentSpec::rate_weights() const
{
    switch (weight_profile)
    {
    case WeightProfile::Equal:
        return RateWeights::equal(dims.K);
    case WeightProfile::FavorFirst:
        return RateWeights::favor_first(dims.K);
    case WeightProfile::Explicit:
        break;
    }
    return RateWeights(mu);
}

void ExperimentSpec::validate() const
{
    dims.validate();
    if (trials < 1)
        throw std::invalid_argument("trials must be at least 1");
    if (snr_db.empty())
        throw std::invalid_argument("at least one SNR point is required");
    if (weight_profile == WeightProfile::Explicit && static_cast<int>(mu.size()) != dims.K)
        throw std::invalid_argument("rate weight count must equal K");
    rate_weights();
    if (methods.empty() || constraints.empty())
        throw std::invalid_argument("at least one method and one constraint are required");
    if (robust.enabled && (!(robust.sigma_delta_frac >= 0.0) || !(robust.sigma_eps_frac >= 0.0)))
        throw std::invalid_argument("mismatch fractions must be nonnegative");
    if (threads < 0)
        throw std::invalid_argument("threads must be nonnegative");
    optimizer.validate();
    gradient.validate();
}

void apply_setting(ExperimentSpec &spec, std::string_view key, std::string_view value)
{
    key = trim(key);
    value = trim(value);
    if (key == "K")
        spec.dims.K = parse_number<int>(key, value);
    else if (key == "M")
        spec.dims.M = parse_number<int>(key, value);
    else if (key == "N")
        spec.dims.N = parse_number<int>(key, value);
    else if (key == "d")
        spec.dims.d = parse_number<int>(key, value);
    else if (key == "snr_db" || key == "snr")
        spec.snr_db = parse_list(key, value);
    else if (key == "mu")
    {
        // "equal", "unequal" (2 for the first user, 0.25 otherwise) or a list.
        if (value == "equal")
            spec.weight_profile = ExperimentSpec::WeightProfile::Equal;
        else if (value == "unequal")
            spec.weight_profile = ExperimentSpec::WeightProfile::FavorFirst;
        else
        {
            spec.weight_profile = ExperimentSpec::WeightProfile::Explicit;
            spec.mu = parse_list(key, value);
        }
    }
    else if (key == "constraint")
    {
        if (value == "both")
            spec.constraints = {ConstraintMode::Sum, ConstraintMode::PerNode};
        else
        {
            spec.constraints.clear();
            for (auto part : split(value, ','))
                spec.constraints.push_back(parse_constraint_mode(part));
        }
    }
    else if (key == "methods")
    {
        spec.methods.clear();
        for (auto part : split(value, ','))
            spec.methods.push_back(parse_method(part));
    }
    else if (key == "robust")
        spec.robust.enabled = parse_bool(key, value);
    else if (key == "sigma_delta_frac")
        spec.robust.sigma_delta_frac = parse_number<double>(key, value);
    else if (key == "sigma_eps_frac")
        spec.robust.sigma_eps_frac = parse_number<double>(key, value);
    else if (key == "trials")
        spec.trials = parse_number<int>(key, value);
    else if (key == "seed")
        spec.master_seed = parse_number<std::uint64_t>(key, value);
    else if (key == "epsilon")
        spec.optimizer.epsilon = parse_number<double>(key, value);
    else if (key == "max_iters")
        spec.optimizer.max_iters = parse_number<int>(key, value);
    else if (key == "restarts")
        spec.optimizer.restarts = parse_number<int>(key, value);
    else if (key == "bisection_tol")
        spec.optimizer.bisection_tol = parse_number<double>(key, value);
    else if (key == "init")
    {
        if (value == "right_singular")
            spec.optimizer.init = spec.gradient.init = InitKind::RightSingular;
        else if (value == "random")
            spec.optimizer.init = spec.gradient.init = InitKind::RandomGaussian;
        else
            throw std::invalid_argument("unknown init '" + std::string(value) + "'");
    }
    else if (key == "gradient_iters")
        spec.gradient.outer_iters = parse_number<int>(key, value);
    else if (key == "gradient_step_trials")
        spec.gradient.max_step_trials = parse_number<int>(key, value);
    else if (key == "gradient_epsilon")
        spec.gradient.epsilon = parse_number<double>(key, value);
    else if (key == "threads")
        spec.threads = parse_number<int>(key, value);
    else if (key == "out" || key == "output")
        spec.output = std::string(value);
    else
        throw std::invalid_argument("unknown setting '" + std::string(key) + "'");
}

ExperimentSpec parse_spec(std::string_view text, ExperimentSpec base)
{
    int line_no = 0;
    for (auto line : split(text, '\n'))
    {
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected key = value");
        try
        {
            apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
        }
        catch (const std::invalid_argument &e)
        {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return base;
}

ExperimentSpec load_spec_file(const std::string &path, ExperimentSpec base)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open spec file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try
    {
        return parse_spec(buf.str(), std::move(base));
    }
    catch (const std::invalid_argument &e)
    {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

bool dof_feasible(const NetworkDims &dims) { return dims.M + dims.N >= (dims.K + 1) * dims.d; }

const ResultRow *ResultTable::find(double snr_db, Method method, ConstraintMode constraint, bool robust) const
{
    for (const auto &r : rows)
        if (r.snr_db == snr_db && r.method == method && r.constraint == constraint && r.robust == robust)
            return &r;
    return nullptr;
}

namespace {

struct Variant
{
    Method method;
    ConstraintMode constraint;
    bool robust;
};

struct Outcome
{
    bool ok = false;
    double wsr = 0.0;
    int iterations = 0;
    int clamps = 0;
};

std::vector<Variant> enumerate_variants(const ExperimentSpec &spec)
{
    std::vector<Variant> out;
    for (auto m : spec.methods)
        for (auto c : spec.constraints)
        {
            out.push_back({m, c, false});
            // Only the rate-matched design has a robust counterpart.
            if (spec.robust.enabled && m == Method::Wmmse)
                out.push_back({m, c, true});
        }
    return out;
}

Outcome run_variant(const ExperimentSpec &spec, const Variant &v, const ChannelSet &truth, const ChannelSet &design,
                    double assumed_variance, std::uint64_t trial_seed)
{
    const int K = spec.dims.K;
    const auto mu = spec.rate_weights();
    const auto constraint = standard_constraint(v.constraint, K);
    Outcome o;
    try
    {
        OptimizerConfig cfg = spec.optimizer;
        cfg.seed = derive_seed(trial_seed, {static_cast<std::uint64_t>(Stream::Init)});
        std::vector<CMatrix> precoders;
        switch (v.method)
        {
        case Method::Wmmse: {
            const auto res = v.robust ? run_algorithm1(RobustContext{design, assumed_variance}, mu, constraint, cfg)
                                      : run_algorithm1(design, mu, constraint, cfg);
            precoders = res.state.precoders;
            o.iterations = res.trace.iterations;
            o.clamps = res.trace.clamp_events;
            break;
        }
        case Method::SimpleMmse: {
            const auto res = simple_mmse_run(design, mu, constraint, cfg);
            precoders = res.state.precoders;
            o.iterations = res.trace.iterations;
            o.clamps = res.trace.clamp_events;
            break;
        }
        case Method::Gradient: {
            GradientConfig g = spec.gradient;
            g.seed = cfg.seed;
            const auto res = projected_gradient_wsr(design, mu, constraint, g);
            precoders = res.precoders;
            o.iterations = res.trace.iterations;
            break;
        }
        }
        // Realized rates are always measured on the true channels.
        o.wsr = weighted_sum_rate(truth, precoders, mu);
        o.ok = std::isfinite(o.wsr);
    }
    catch (const DegenerateInput &)
    {
        o.ok = false;
    }
    catch (const NumericalError &)
    {
        o.ok = false;
    }
    return o;
}

} // namespace

ResultTable run_experiment(const ExperimentSpec &spec)
{
    spec.validate();
    const auto variants = enumerate_variants(spec);
    const std::size_t per_trial = spec.snr_db.size() * variants.size();
    std::vector<std::vector<Outcome>> outcomes(static_cast<std::size_t>(spec.trials));

    auto run_trial = [&](int t) {
        auto &slot = outcomes[static_cast<std::size_t>(t)];
        slot.resize(per_trial);
        const std::uint64_t trial_seed = derive_seed(spec.master_seed, {static_cast<std::uint64_t>(Stream::Trial),
                                                                         static_cast<std::uint64_t>(t)});
        for (std::size_t s = 0; s < spec.snr_db.size(); ++s)
        {
            const double sigma_h_sq = snr_to_sigma_h(spec.snr_db[s]);
            const ChannelSet truth = generate_channels(spec.dims, sigma_h_sq, trial_seed);
            ChannelSet design = truth;
            double assumed = 0.0;
            if (spec.robust.enabled)
            {
                const double actual = spec.robust.sigma_delta_frac * sigma_h_sq;
                design = apply_mismatch(truth, actual, trial_seed).estimated_channels;
                assumed = actual * (1.0 + spec.robust.sigma_eps_frac);
            }
            for (std::size_t v = 0; v < variants.size(); ++v)
                slot[s * variants.size() + v] = run_variant(spec, variants[v], truth, design,
                                                            variants[v].robust ? assumed : 0.0, trial_seed);
        }
    };

    int workers = spec.threads > 0 ? spec.threads : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, spec.trials);
    if (workers == 1)
    {
        for (int t = 0; t < spec.trials; ++t)
            run_trial(t);
    }
    else
    {
        std::atomic<int> next{0};
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int t = next++; t < spec.trials; t = next++)
                    run_trial(t);
            });
    }

    ResultTable table;
    for (std::size_t s = 0; s < spec.snr_db.size(); ++s)
        for (std::size_t v = 0; v < variants.size(); ++v)
        {
            std::vector<double> wsr;
            std::vector<double> iters;
            ResultRow row;
            row.snr_db = spec.snr_db[s];
            row.method = variants[v].method;
            row.constraint = variants[v].constraint;
            row.robust = variants[v].robust;
            for (const auto &trial : outcomes)
            {
                const auto &o = trial[s * variants.size() + v];
                if (!o.ok)
                {
                    ++row.failed_trials;
                    continue;
                }
                wsr.push_back(o.wsr);
                iters.push_back(o.iterations);
                row.clamp_count += o.clamps;
            }
            const double n = static_cast<double>(wsr.size());
            if (n > 0)
            {
                row.mean_wsr = pairwise_sum(wsr) / n;
                row.mean_iterations = pairwise_sum(iters) / n;
            }
            if (n > 1)
            {
                std::vector<double> sq;
                sq.reserve(wsr.size());
                for (double x : wsr)
                    sq.push_back((x - row.mean_wsr) * (x - row.mean_wsr));
                row.std_error = std::sqrt(pairwise_sum(sq) / (n - 1.0)) / std::sqrt(n);
            }
            table.rows.push_back(row);
        }
    return table;
}

std::string format_csv(const ResultTable &table)
{
    std::string out = std::string(kCsvHeader) + '\n';
    for (const auto &r : table.rows)
    {
        out += format_real(r.snr_db) + ',' + to_string(r.method) + ',' + to_string(r.constraint) + ',' +
               (r.robust ? "1" : "0") + ',' + format_real(r.mean_wsr) + ',' + format_real(r.std_error) + ',' +
               format_real(r.mean_iterations) + ',' + std::to_string(r.clamp_count) + ',' +
               std::to_string(r.failed_trials) + '\n';
    }
    return out;
}

void write_text_file(const std::string &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing '" + path + "'");
}

void emit_csv(const ResultTable &table, const std::string &path) { write_text_file(path, format_csv(table)); }

ResultTable parse_csv(std::string_view text)
{
    ResultTable table;
    bool header = true;
    for (auto line : split(text, '\n'))
    {
        if (line.empty())
            continue;
        if (header)
        {
            if (trim(line) != kCsvHeader)
                throw std::invalid_argument("unexpected result header: " + std::string(line));
            header = false;
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 9)
            throw std::invalid_argument("malformed result row: " + std::string(line));
        ResultRow r;
        r.snr_db = parse_number<double>("snr_db", f[0]);
        r.method = parse_method(f[1]);
        r.constraint = parse_constraint_mode(f[2]);
        r.robust = parse_bool("robust", f[3]);
        r.mean_wsr = parse_number<double>("mean_wsr", f[4]);
        r.std_error = parse_number<double>("std_error", f[5]);
        r.mean_iterations = parse_number<double>("mean_iterations", f[6]);
        r.clamp_count = parse_number<long>("clamp_count", f[7]);
        r.failed_trials = parse_number<int>("failed_trials", f[8]);
        table.rows.push_back(r);
    }
    return table;
}

std::string format_summary(const ResultTable &table)
{
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%8s  %-12s %-8s %-6s %10s %10s %8s %7s %6s\n", "SNR[dB]", "method", "power",
                  "robust", "WSR[bit]", "stderr", "iters", "clamps", "failed");
    out += buf;
    for (const auto &r : table.rows)
    {
        std::snprintf(buf, sizeof buf, "%8.2f  %-12s %-8s %-6s %10.4f %10.4f %8.2f %7ld %6d\n", r.snr_db,
                      to_string(r.method).c_str(), to_string(r.constraint).c_str(), r.robust ? "yes" : "no",
                      r.mean_wsr, r.std_error, r.mean_iterations, r.clamp_count, r.failed_trials);
        out += buf;
    }
    return out;
}

std::string complexity_curves_csv(const ComplexitySweep &sweep)
{
    if (sweep.k_min < 1 || sweep.k_max < sweep.k_min)
        throw std::invalid_argument("invalid K range for the complexity sweep");
    std::string out = "K,method,total_flops,total_feedback\n";
    char buf[160];
    for (int K = sweep.k_min; K <= sweep.k_max; ++K)
    {
        const ComplexityParams p{K, sweep.M, sweep.N, sweep.d, sweep.I1, sweep.I2, sweep.I3};
        for (const auto &report : {flops_gradient(p), flops_proposed_ind(p), flops_proposed_sum(p)})
        {
            std::snprintf(buf, sizeof buf, "%d,%s,%.10g,%.10g\n", K, report.method.c_str(), report.total,
                          report.feedback.total());
            out += buf;
        }
    }
    return out;
}

void emit_complexity_curves(const ComplexitySweep &sweep, const std::string &path)
{
    write_text_file(path, complexity_curves_csv(sweep));
}

} // namespace wmmse
