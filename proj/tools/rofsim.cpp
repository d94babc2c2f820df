// SPDX-License-Identifier: Apache-2.0
//
// rofsim - photonic hybrid precoding simulator for mmWave multiuser MIMO
// Copyright (C) 2026 the rofsim authors
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

#include "rofsim/errors.hpp"
#include "rofsim/scenario.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

namespace
{

// Exit discipline: 0 ok, 2 usage, 3 validation, 4 io.
constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_validation = 3;
constexpr int exit_io = 4;

struct SimulateOptions
{
    std::string scenario_path;
    std::string preset_name;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::string out_path;
    unsigned workers = 0;
};

int run_simulate(const SimulateOptions &options)
{
    rofsim::ScenarioConfig config;
    std::string output = "metrics.csv";

    if (!options.preset_name.empty())
    {
        try
        {
            config = rofsim::preset(options.preset_name);
        }
        catch (const rofsim::argument_error &e)
        {
            std::fprintf(stderr, "error: %s\n", e.what());
            return exit_usage;
        }
        output = options.preset_name + ".csv";
    }
    if (!options.scenario_path.empty())
    {
        // the file overlays the command-line preset; a preset named inside
        // the file replaces it
        const rofsim::LoadedScenario loaded =
            rofsim::parse_scenario(options.scenario_path, config);
        config = loaded.config;
        if (!loaded.output.empty())
            output = loaded.output;
    }
    else if (options.preset_name.empty())
    {
        std::fprintf(stderr, "error: simulate needs --scenario and/or --preset\n");
        return exit_usage;
    }

    if (options.seed)
        config.seed = *options.seed;
    if (options.trials)
        config.trials = *options.trials;
    if (!options.out_path.empty())
        output = options.out_path;

    config.validate();

    const auto started = std::chrono::steady_clock::now();
    std::uint64_t singular_total = 0;

    if (config.experiment == rofsim::ExperimentKind::beam_pattern)
    {
        const std::vector<double> grid = config.pattern.grid();
        const auto rows = rofsim::beam_pattern_sweep(grid, config.pattern.focus_rad,
                                                     config.geometry, config.plan,
                                                     config.pattern.rf_lambda_m);
        rofsim::emit_beam_pattern_csv(rows, output);
        std::printf("beam pattern: %zu angles -> %s\n", rows.size(), output.c_str());
    }
    else
    {
        const auto records = rofsim::run_sweep(config, options.workers);
        rofsim::emit_metrics_csv(records, output);
        for (const auto &record : records)
        {
            std::printf("snr %6.1f dB  se %10.4f  ber %.6e  (%llu trials, %llu singular)\n",
                        record.snr_db, record.se_mean, record.ber_mean,
                        static_cast<unsigned long long>(record.trials),
                        static_cast<unsigned long long>(record.singular_trials));
            singular_total += record.singular_trials;
        }
        std::printf("metrics -> %s\n", output.c_str());
    }

    const double duration =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    rofsim::RunManifest manifest;
    manifest.config = config;
    manifest.effective_seed = config.seed;
    manifest.duration_seconds = duration;
    manifest.singular_trials_total = singular_total;
    manifest.output = output;
    rofsim::write_manifest(manifest, output);
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Photonic hybrid precoding simulator for mmWave multiuser MIMO"};
    app.require_subcommand(1);

    SimulateOptions options;
    CLI::App *simulate = app.add_subcommand(
        "simulate", "Run a scenario or preset and emit CSV metrics plus a run manifest");
    simulate->add_option("--scenario", options.scenario_path, "Scenario file (JSON)");
    simulate->add_option("--preset", options.preset_name,
                         "Preset name: fig3, fig4-se, fig4-ber, massive-mimo");
    simulate->add_option("--seed", options.seed, "Override the scenario seed");
    simulate->add_option("--trials", options.trials, "Override the trial count");
    simulate->add_option("--out", options.out_path, "Output CSV path");
    simulate->add_option("--workers", options.workers,
                         "Worker threads (affects wall time only, never output bytes)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        return run_simulate(options);
    }
    catch (const rofsim::io_error &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_io;
    }
    catch (const rofsim::error &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_validation;
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
