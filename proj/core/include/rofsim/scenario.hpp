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

#ifndef rofsim_scenario_H
#define rofsim_scenario_H

#include "rofsim/arrays.hpp"
#include "rofsim/metrics.hpp"
#include "rofsim/montecarlo.hpp"

#include <cstdint>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <string_view>

namespace rofsim
{

inline constexpr std::string_view version_string = "rofsim 0.1.0";

// Canned experiment configurations.
//   fig3         beam-pattern sweep, 16-element ULA, 4 optical carriers
//   fig4-se      spectral-efficiency sweep, 4x4 USPA, K = N_r = 3
//   fig4-ber     bit-error-rate sweep, same setup, 0..40 dB grid
//   massive-mimo desk-scale large-array check, M = 1024
ScenarioConfig preset(std::string_view name);

// Loads and validates a scenario file. The file mirrors ScenarioConfig
// field-for-field (JSON), plus optional "preset" (base values) and "output"
// keys; explicit fields override the preset. Unknown keys are rejected.
struct LoadedScenario
{
    ScenarioConfig config;
    std::string output; // empty when the file names none
};

LoadedScenario parse_scenario(const std::filesystem::path &path);
// Same, but fields missing from the file fall back to the given base
// (a file-level "preset" key still replaces the base).
LoadedScenario parse_scenario(const std::filesystem::path &path, ScenarioConfig base);

// Strict-key JSON decoding on top of an optional base config.
ScenarioConfig scenario_from_json(const nlohmann::json &doc);
ScenarioConfig scenario_from_json(const nlohmann::json &doc, ScenarioConfig base);
nlohmann::json scenario_to_json(const ScenarioConfig &config);

// Sweep results with the pinned header
// snr_db,se_mean,se_stderr,ber_mean,ber_stderr,se_bound_eq13,ber_bound_eq18,trials,singular_trials
// and floating point at 17 significant digits.
void emit_metrics_csv(std::span<const MetricsRecord> records,
                      const std::filesystem::path &path);

// Beam-pattern table with header angle_rad,gain_photonic,gain_rf,gain_bound.
void emit_beam_pattern_csv(std::span<const BeamPatternRow> rows,
                           const std::filesystem::path &path);

// Written next to every output file as <output>.manifest.json.
struct RunManifest
{
    ScenarioConfig config;
    std::uint64_t effective_seed = 0;
    double duration_seconds = 0.0;
    std::uint64_t singular_trials_total = 0;
    std::string output;
};

void write_manifest(const RunManifest &manifest, const std::filesystem::path &output_path);

} // namespace rofsim

#endif
