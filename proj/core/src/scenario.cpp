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

#include "rofsim/scenario.hpp"

#include "rofsim/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace rofsim
{

namespace
{

constexpr double deg(double value) { return value * 0.017453292519943295; }

std::string fp17(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

ArrayKind array_kind_from(const std::string &token)
{
    if (token == "ula")
        return ArrayKind::ula;
    if (token == "uspa")
        return ArrayKind::uspa;
    throw config_error("geometry.kind must be \"ula\" or \"uspa\", got \"" + token + "\"");
}

std::string to_token(ArrayKind kind) { return kind == ArrayKind::ula ? "ula" : "uspa"; }

PrecoderChoice precoder_from(const std::string &token)
{
    if (token == "zf")
        return PrecoderChoice::zero_forcing;
    if (token == "mmse")
        return PrecoderChoice::mmse;
    throw config_error("precoder must be \"zf\" or \"mmse\", got \"" + token + "\"");
}

std::string to_token(PrecoderChoice choice)
{
    return choice == PrecoderChoice::zero_forcing ? "zf" : "mmse";
}

BeamformerChoice beamformer_from(const std::string &token)
{
    if (token == "rof-multicarrier")
        return BeamformerChoice::rof_multicarrier;
    if (token == "rf-singlecarrier")
        return BeamformerChoice::rf_singlecarrier;
    throw config_error(
        "beamformer must be \"rof-multicarrier\" or \"rf-singlecarrier\", got \"" + token +
        "\"");
}

std::string to_token(BeamformerChoice choice)
{
    return choice == BeamformerChoice::rof_multicarrier ? "rof-multicarrier"
                                                        : "rf-singlecarrier";
}

ExperimentKind experiment_from(const std::string &token)
{
    if (token == "monte-carlo")
        return ExperimentKind::monte_carlo;
    if (token == "beam-pattern")
        return ExperimentKind::beam_pattern;
    throw config_error("experiment must be \"monte-carlo\" or \"beam-pattern\", got \"" +
                       token + "\"");
}

std::string to_token(ExperimentKind kind)
{
    return kind == ExperimentKind::monte_carlo ? "monte-carlo" : "beam-pattern";
}

void reject_unknown_keys(const nlohmann::json &doc, const std::set<std::string> &known,
                         const std::string &where)
{
    for (const auto &item : doc.items())
        if (!known.contains(item.key()))
            throw config_error("unknown key \"" + item.key() + "\" in " + where);
}

std::vector<double> snr_grid(double start_db, double stop_db, double step_db)
{
    std::vector<double> grid;
    const auto count = static_cast<std::size_t>((stop_db - start_db) / step_db + 1.5);
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        grid.push_back(start_db + static_cast<double>(i) * step_db);
    return grid;
}

ScenarioConfig fig4_base()
{
    ScenarioConfig config;
    config.experiment = ExperimentKind::monte_carlo;
    config.tx_antennas = 16;
    config.rx_antennas = 1;
    config.users = 3;
    config.carriers = 3;
    config.paths = 1;
    config.geometry = {ArrayKind::uspa, 16, 10.70e-3 / 2.0};
    config.plan = CarrierPlan::uniform(std::vector<double>(3, 10.70e-3));
    config.trials = 100000;
    config.seed = 42;
    config.precoder = PrecoderChoice::zero_forcing;
    config.beamformer = BeamformerChoice::rof_multicarrier;
    config.bits_per_trial = 100;
    return config;
}

} // namespace

ScenarioConfig preset(std::string_view name)
{
    if (name == "fig3")
    {
        ScenarioConfig config;
        config.experiment = ExperimentKind::beam_pattern;
        config.tx_antennas = 16;
        config.rx_antennas = 1;
        config.users = 1;
        config.carriers = 4;
        config.paths = 1;
        config.geometry = {ArrayKind::ula, 16, 10.70e-3 / 2.0};
        config.plan = CarrierPlan::uniform({10.70e-3, 7.1e-3, 4.99e-3, 4.10e-3});
        config.snr_grid_db = {0.0};
        config.trials = 1;
        config.seed = 1;
        config.bits_per_trial = 0;
        config.pattern = {0.0, deg(-90.0), deg(90.0), deg(0.1), 10.70e-3};
        return config;
    }
    if (name == "fig4-se")
    {
        ScenarioConfig config = fig4_base();
        config.snr_grid_db = snr_grid(-20.0, 20.0, 5.0);
        return config;
    }
    if (name == "fig4-ber")
    {
        ScenarioConfig config = fig4_base();
        config.snr_grid_db = snr_grid(0.0, 40.0, 5.0);
        return config;
    }
    if (name == "massive-mimo")
    {
        ScenarioConfig config;
        config.experiment = ExperimentKind::monte_carlo;
        config.tx_antennas = 1024;
        config.rx_antennas = 1;
        config.users = 3;
        config.carriers = 4;
        config.paths = 1;
        config.geometry = {ArrayKind::ula, 1024, 10.70e-3 / 2.0};
        config.plan = CarrierPlan::uniform(std::vector<double>(4, 10.70e-3));
        config.snr_grid_db = {0.0};
        config.trials = 100;
        config.seed = 42;
        config.precoder = PrecoderChoice::zero_forcing;
        config.beamformer = BeamformerChoice::rof_multicarrier;
        config.bits_per_trial = 100;
        return config;
    }
    throw argument_error("unknown preset \"" + std::string(name) + "\"");
}

ScenarioConfig scenario_from_json(const nlohmann::json &doc)
{
    return scenario_from_json(doc, ScenarioConfig{});
}

ScenarioConfig scenario_from_json(const nlohmann::json &doc, ScenarioConfig base)
{
    static const std::set<std::string> top_keys{
        "preset",   "output",      "experiment", "M",         "N",
        "K",        "N_r",         "L",          "geometry",  "plan",
        "snr_grid_db", "trials",   "seed",       "precoder",  "beamformer",
        "bits_per_trial", "pattern"};
    reject_unknown_keys(doc, top_keys, "scenario");

    ScenarioConfig config = std::move(base);
    if (doc.contains("experiment"))
        config.experiment = experiment_from(doc.at("experiment").get<std::string>());
    if (doc.contains("M"))
        config.tx_antennas = doc.at("M").get<std::size_t>();
    if (doc.contains("N"))
        config.rx_antennas = doc.at("N").get<std::size_t>();
    if (doc.contains("K"))
        config.users = doc.at("K").get<std::size_t>();
    if (doc.contains("N_r"))
        config.carriers = doc.at("N_r").get<std::size_t>();
    if (doc.contains("L"))
        config.paths = doc.at("L").get<std::size_t>();
    if (doc.contains("geometry"))
    {
        const auto &geom = doc.at("geometry");
        reject_unknown_keys(geom, {"kind", "M", "d_m"}, "geometry");
        if (geom.contains("kind"))
            config.geometry.kind = array_kind_from(geom.at("kind").get<std::string>());
        config.geometry.elements =
            geom.contains("M") ? geom.at("M").get<std::size_t>() : config.tx_antennas;
        if (geom.contains("d_m"))
            config.geometry.spacing_m = geom.at("d_m").get<double>();
    }
    else if (doc.contains("M"))
    {
        config.geometry.elements = config.tx_antennas;
    }
    if (doc.contains("plan"))
    {
        const auto &plan = doc.at("plan");
        reject_unknown_keys(plan, {"wavelengths_m", "xi", "frac_bw"}, "plan");
        CarrierPlan parsed;
        parsed.wavelength_m = plan.at("wavelengths_m").get<std::vector<double>>();
        parsed.subcarrier_ratio =
            plan.contains("xi") ? plan.at("xi").get<std::vector<double>>()
                                : std::vector<double>(parsed.wavelength_m.size(), 1.0);
        parsed.fractional_bw =
            plan.contains("frac_bw") ? plan.at("frac_bw").get<std::vector<double>>()
                                     : std::vector<double>(parsed.wavelength_m.size(), 0.0);
        config.plan = std::move(parsed);
    }
    if (doc.contains("snr_grid_db"))
        config.snr_grid_db = doc.at("snr_grid_db").get<std::vector<double>>();
    if (doc.contains("trials"))
        config.trials = doc.at("trials").get<std::uint64_t>();
    if (doc.contains("seed"))
        config.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("precoder"))
        config.precoder = precoder_from(doc.at("precoder").get<std::string>());
    if (doc.contains("beamformer"))
        config.beamformer = beamformer_from(doc.at("beamformer").get<std::string>());
    if (doc.contains("bits_per_trial"))
        config.bits_per_trial = doc.at("bits_per_trial").get<std::uint64_t>();
    if (doc.contains("pattern"))
    {
        const auto &pattern = doc.at("pattern");
        reject_unknown_keys(
            pattern,
            {"focus_rad", "angle_start_rad", "angle_stop_rad", "angle_step_rad", "rf_lambda_m"},
            "pattern");
        if (pattern.contains("focus_rad"))
            config.pattern.focus_rad = pattern.at("focus_rad").get<double>();
        if (pattern.contains("angle_start_rad"))
            config.pattern.angle_start_rad = pattern.at("angle_start_rad").get<double>();
        if (pattern.contains("angle_stop_rad"))
            config.pattern.angle_stop_rad = pattern.at("angle_stop_rad").get<double>();
        if (pattern.contains("angle_step_rad"))
            config.pattern.angle_step_rad = pattern.at("angle_step_rad").get<double>();
        if (pattern.contains("rf_lambda_m"))
            config.pattern.rf_lambda_m = pattern.at("rf_lambda_m").get<double>();
    }
    config.validate();
    return config;
}

nlohmann::json scenario_to_json(const ScenarioConfig &config)
{
    return {
        {"experiment", to_token(config.experiment)},
        {"M", config.tx_antennas},
        {"N", config.rx_antennas},
        {"K", config.users},
        {"N_r", config.carriers},
        {"L", config.paths},
        {"geometry",
         {{"kind", to_token(config.geometry.kind)},
          {"M", config.geometry.elements},
          {"d_m", config.geometry.spacing_m}}},
        {"plan",
         {{"wavelengths_m", config.plan.wavelength_m},
          {"xi", config.plan.subcarrier_ratio},
          {"frac_bw", config.plan.fractional_bw}}},
        {"snr_grid_db", config.snr_grid_db},
        {"trials", config.trials},
        {"seed", config.seed},
        {"precoder", to_token(config.precoder)},
        {"beamformer", to_token(config.beamformer)},
        {"bits_per_trial", config.bits_per_trial},
        {"pattern",
         {{"focus_rad", config.pattern.focus_rad},
          {"angle_start_rad", config.pattern.angle_start_rad},
          {"angle_stop_rad", config.pattern.angle_stop_rad},
          {"angle_step_rad", config.pattern.angle_step_rad},
          {"rf_lambda_m", config.pattern.rf_lambda_m}}},
    };
}

LoadedScenario parse_scenario(const std::filesystem::path &path)
{
    return parse_scenario(path, ScenarioConfig{});
}

LoadedScenario parse_scenario(const std::filesystem::path &path, ScenarioConfig base)
{
    std::ifstream input(path);
    if (!input)
        throw io_error("cannot open scenario file " + path.string());
    nlohmann::json doc;
    try
    {
        input >> doc;
    }
    catch (const nlohmann::json::exception &e)
    {
        throw config_error("malformed scenario file " + path.string() + ": " + e.what());
    }

    if (doc.contains("preset"))
        base = preset(doc.at("preset").get<std::string>());

    LoadedScenario loaded;
    loaded.config = scenario_from_json(doc, std::move(base));
    if (doc.contains("output"))
        loaded.output = doc.at("output").get<std::string>();
    return loaded;
}

void emit_metrics_csv(std::span<const MetricsRecord> records,
                      const std::filesystem::path &path)
{
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write " + path.string());
    out << "snr_db,se_mean,se_stderr,ber_mean,ber_stderr,se_bound_eq13,ber_bound_eq18,"
           "trials,singular_trials\n";
    for (const MetricsRecord &r : records)
        out << fp17(r.snr_db) << ',' << fp17(r.se_mean) << ',' << fp17(r.se_stderr) << ','
            << fp17(r.ber_mean) << ',' << fp17(r.ber_stderr) << ','
            << fp17(r.se_bound_eq13) << ',' << fp17(r.ber_bound_eq18) << ',' << r.trials
            << ',' << r.singular_trials << '\n';
    if (!out.flush())
        throw io_error("failed to write " + path.string());
}

void emit_beam_pattern_csv(std::span<const BeamPatternRow> rows,
                           const std::filesystem::path &path)
{
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write " + path.string());
    out << "angle_rad,gain_photonic,gain_rf,gain_bound\n";
    for (const BeamPatternRow &row : rows)
        out << fp17(row.angle_rad) << ',' << fp17(row.gain_photonic) << ','
            << fp17(row.gain_rf) << ',' << fp17(row.gain_bound) << '\n';
    if (!out.flush())
        throw io_error("failed to write " + path.string());
}

void write_manifest(const RunManifest &manifest, const std::filesystem::path &output_path)
{
    const nlohmann::json doc = {
        {"version", std::string(version_string)},
        {"config", scenario_to_json(manifest.config)},
        {"effective_seed", manifest.effective_seed},
        {"duration_seconds", manifest.duration_seconds},
        {"singular_trials_total", manifest.singular_trials_total},
        {"output", manifest.output},
    };
    const std::filesystem::path path = output_path.string() + ".manifest.json";
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write " + path.string());
    out << doc.dump(2) << '\n';
    if (!out.flush())
        throw io_error("failed to write " + path.string());
}

} // namespace rofsim
