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

#ifndef rofsim_montecarlo_H
#define rofsim_montecarlo_H

#include "rofsim/arrays.hpp"
#include "rofsim/metrics.hpp"
#include "rofsim/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rofsim
{

enum class PrecoderChoice
{
    zero_forcing,
    mmse
};

enum class BeamformerChoice
{
    rof_multicarrier, // N_r optical carriers, per-carrier steering + modulator weights
    rf_singlecarrier  // N_r RF chains on one wavelength, no modulator stage;
                      // the effective carrier count in gains and power is 1
};

enum class ExperimentKind
{
    monte_carlo,
    beam_pattern
};

// Angle sweep parameters for beam-pattern runs.
struct BeamPatternSetup
{
    double focus_rad = 0.0;
    double angle_start_rad = -1.5707963267948966;
    double angle_stop_rad = 1.5707963267948966;
    double angle_step_rad = 0.0017453292519943296; // 0.1 degree
    double rf_lambda_m = 10.70e-3;

    std::vector<double> grid() const;
};

// One fully resolved experiment description.
struct ScenarioConfig
{
    ExperimentKind experiment = ExperimentKind::monte_carlo;
    std::size_t tx_antennas = 16;  // M
    std::size_t rx_antennas = 1;   // N
    std::size_t users = 3;         // K
    std::size_t carriers = 3;      // N_r
    std::size_t paths = 1;         // L
    ArrayGeometry geometry;
    CarrierPlan plan;
    std::vector<double> snr_grid_db;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    PrecoderChoice precoder = PrecoderChoice::zero_forcing;
    BeamformerChoice beamformer = BeamformerChoice::rof_multicarrier;
    std::uint64_t bits_per_trial = 100;
    BeamPatternSetup pattern;

    // Throws config_error naming the offending field.
    void validate() const;
};

struct TrialOutcome
{
    double se = 0.0;
    std::uint64_t bit_errors = 0;
    std::uint64_t bits = 0;
    std::vector<double> sinr;    // per user
    double se_bound = 0.0;       // closed-form sum-rate bound at this trial's path gains
    bool singular = false;
};

// Stream for trial trial_index of a run seeded with seed. Deterministic for
// the pair and disjoint across trial indices.
RandomStream rng_substream(std::uint64_t seed, std::uint64_t trial_index);

// Draws one channel, builds the configured precoder chain, evaluates SINR
// and spectral efficiency, and pushes bits_per_trial BPSK bits per user
// through the composite gains with AWGN at N_o = P_s / snr. Rank-deficient
// effective channels set the singular flag and contribute nothing.
TrialOutcome run_trial(const ScenarioConfig &config, double snr_linear, RandomStream &stream);

// Full SNR sweep; trial t always consumes substream (seed, t), so the
// aggregate is identical for every worker count. workers = 0 picks the
// hardware concurrency.
std::vector<MetricsRecord> run_sweep(const ScenarioConfig &config, unsigned workers = 0);

// Negated least-squares slope of log10(ber_mean) against snr_db / 10 over
// the records inside the window; estimates the diversity order.
double diversity_slope(std::span<const MetricsRecord> records,
                       std::pair<double, double> window_db);

// bits BPSK bits through a fixed complex gain with AWGN; detection is the
// sign of the real part after aligning by the known gain phase. Exposed for
// calibration against the closed-form Q(sqrt(2 rho |g|^2 / N_o)).
std::uint64_t bpsk_awgn_errors(std::complex<double> gain, double rho, double noise_power,
                               std::uint64_t bits, RandomStream &stream);

} // namespace rofsim

#endif
