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

// Command-line front end: Monte Carlo sweeps, complexity curves and the
// invariant self-check.

#include "wmmse/experiment.hpp"
#include "wmmse/validation.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

namespace {

struct RunFlags
{
    std::string spec_path;
    std::string out;
    std::optional<int> trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> snr;
    std::optional<std::string> constraint;
    std::optional<std::string> methods;
    std::optional<std::string> mu;
    bool robust = false;
    std::optional<double> sigma_delta_frac;
    std::optional<double> sigma_eps_frac;
    std::optional<int> threads;
    std::vector<std::string> settings;
};

int do_run(const RunFlags &flags)
{
    using namespace wmmse;
    ExperimentSpec spec;
    if (!flags.spec_path.empty())
        spec = load_spec_file(flags.spec_path, spec);

    // Command-line flags take precedence over the spec file.
    for (const auto &kv : flags.settings)
    {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
        apply_setting(spec, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (flags.trials)
        spec.trials = *flags.trials;
    if (flags.seed)
        spec.master_seed = *flags.seed;
    if (flags.snr)
        apply_setting(spec, "snr_db", *flags.snr);
    if (flags.constraint)
        apply_setting(spec, "constraint", *flags.constraint);
    if (flags.methods)
        apply_setting(spec, "methods", *flags.methods);
    if (flags.mu)
        apply_setting(spec, "mu", *flags.mu);
    if (flags.robust)
        spec.robust.enabled = true;
    if (flags.sigma_delta_frac)
        spec.robust.sigma_delta_frac = *flags.sigma_delta_frac;
    if (flags.sigma_eps_frac)
        spec.robust.sigma_eps_frac = *flags.sigma_eps_frac;
    if (flags.threads)
        spec.threads = *flags.threads;
    if (!flags.out.empty())
        spec.output = flags.out;

    spec.validate();
    if (!dof_feasible(spec.dims))
        std::cerr << "warning: (K, M, N, d) = (" << spec.dims.K << ", " << spec.dims.M << ", " << spec.dims.N << ", "
                  << spec.dims.d << ") violates M + N >= (K + 1) d; interference may not be alignable\n";

    const auto table = run_experiment(spec);
    if (spec.output.empty() || spec.output == "-")
        std::cout << format_csv(table);
    else
        emit_csv(table, spec.output);
    std::cerr << format_summary(table);

    for (const auto &row : table.rows)
        if (row.failed_trials > 0)
            std::cerr << "note: " << row.failed_trials << " degenerate trial(s) skipped for " << to_string(row.method)
                      << "/" << to_string(row.constraint) << " at " << row.snr_db << " dB\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Weighted MMSE transceiver design for the K-user MIMO interference channel"};
    app.require_subcommand(1);

    RunFlags run_flags;
    auto *run = app.add_subcommand("run", "Monte Carlo weighted-sum-rate sweep (writes CSV)");
    run->add_option("--spec", run_flags.spec_path, "Experiment spec file (key = value lines)")->check(CLI::ExistingFile);
    run->add_option("--out", run_flags.out, "Output CSV path ('-' for stdout)");
    run->add_option("--trials", run_flags.trials, "Number of Monte Carlo trials");
    run->add_option("--seed", run_flags.seed, "Master seed");
    run->add_option("--snr", run_flags.snr, "Comma-separated SNR points in dB");
    run->add_option("--constraint", run_flags.constraint, "sum, pernode or both");
    run->add_option("--methods", run_flags.methods, "Comma-separated subset of wmmse,simple_mmse,gradient");
    run->add_option("--mu", run_flags.mu, "equal, unequal or a comma-separated weight list");
    run->add_flag("--robust", run_flags.robust, "Inject channel mismatch and add robust designs");
    run->add_option("--sigma-delta-frac", run_flags.sigma_delta_frac, "Mismatch variance as a fraction of sigma_h^2");
    run->add_option("--sigma-eps-frac", run_flags.sigma_eps_frac,
                    "Assumed-variance over-estimate as a fraction of the mismatch variance");
    run->add_option("--threads", run_flags.threads, "Worker threads (0 = all cores)");
    run->add_option("--set", run_flags.settings, "Any spec setting as key=value (repeatable)");

    wmmse::ComplexitySweep sweep;
    std::string complexity_out;
    auto *complexity = app.add_subcommand("complexity", "Closed-form flop and feedback curves versus K (CSV)");
    complexity->add_option("--out", complexity_out, "Output CSV path (default stdout)");
    complexity->add_option("--k-min", sweep.k_min, "Smallest K");
    complexity->add_option("--k-max", sweep.k_max, "Largest K");
    complexity->add_option("-M", sweep.M, "Transmit antennas");
    complexity->add_option("-N", sweep.N, "Receive antennas");
    complexity->add_option("-d", sweep.d, "Streams per user");
    complexity->add_option("--i1", sweep.I1, "Outer iterations");
    complexity->add_option("--i2", sweep.I2, "Step-size trials");
    complexity->add_option("--i3", sweep.I3, "Multiplier search iterations");

    wmmse::ValidationOptions validation;
    auto *validate = app.add_subcommand("validate", "Run the invariant checks and report pass/fail");
    validate->add_option("--instances", validation.instances, "Random instances per check");
    validate->add_option("--seed", validation.seed, "Seed for the random instances");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*run)
            return do_run(run_flags);
        if (*complexity)
        {
            const auto csv = wmmse::complexity_curves_csv(sweep);
            if (complexity_out.empty() || complexity_out == "-")
                std::cout << csv;
            else
                wmmse::write_text_file(complexity_out, csv);
            return 0;
        }
        if (*validate)
        {
            bool all = true;
            for (const auto &check : wmmse::run_validation(validation))
            {
                std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << ": " << check.detail << '\n';
                all = all && check.passed;
            }
            return all ? 0 : 1;
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
