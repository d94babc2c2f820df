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

#include "rofsim/montecarlo.hpp"

#include "rofsim/channel.hpp"
#include "rofsim/errors.hpp"
#include "rofsim/precoding.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace rofsim
{

std::vector<double> BeamPatternSetup::grid() const
{
    if (!(angle_step_rad > 0.0) || !(angle_stop_rad >= angle_start_rad))
        throw config_error("pattern: angle grid must have positive step and stop >= start");
    std::vector<double> angles;
    const auto count =
        static_cast<std::size_t>((angle_stop_rad - angle_start_rad) / angle_step_rad + 1.5);
    angles.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        angles.push_back(angle_start_rad + static_cast<double>(i) * angle_step_rad);
    return angles;
}

void ScenarioConfig::validate() const
{
    geometry.validate();
    plan.validate();
    if (geometry.elements != tx_antennas)
        throw config_error("geometry.M must equal M");
    if (plan.carriers() != carriers)
        throw config_error("plan must list exactly N_r wavelengths");
    if (experiment == ExperimentKind::beam_pattern)
    {
        (void)pattern.grid();
        return;
    }
    if (!(users >= 1))
        throw config_error("K must be at least 1");
    if (users > carriers)
        throw config_error("constraint violated: K <= N_r");
    if (carriers > tx_antennas)
        throw config_error("constraint violated: N_r <= M");
    if (rx_antennas != 1)
        throw config_error("N must be 1 for Monte-Carlo link experiments");
    if (paths < 1)
        throw config_error("L must be at least 1");
    if (trials < 1)
        throw config_error("trials must be at least 1");
    if (snr_grid_db.empty())
        throw config_error("snr_grid_db must be nonempty");
}

RandomStream rng_substream(std::uint64_t seed, std::uint64_t trial_index)
{
    return {seed, trial_index};
}

std::uint64_t bpsk_awgn_errors(std::complex<double> gain, double rho, double noise_power,
                               std::uint64_t bits, RandomStream &stream)
{
    const double amplitude = std::sqrt(rho);
    const std::complex<double> align =
        std::abs(gain) > 0.0 ? std::conj(gain) / std::abs(gain) : std::complex<double>(1.0, 0.0);
    const double noise_scale = std::sqrt(noise_power);

    std::uint64_t errors = 0;
    for (std::uint64_t i = 0; i < bits; ++i)
    {
        const double symbol = stream.bit() ? 1.0 : -1.0;
        const std::complex<double> received =
            amplitude * gain * symbol + noise_scale * stream.cn01();
        const double decision = std::real(received * align) >= 0.0 ? 1.0 : -1.0;
        if (decision != symbol)
            ++errors;
    }
    return errors;
}

namespace
{

// The RF arm radiates per-carrier power once (effective carrier count 1), so
// its composite is scaled from the N_r K normalization down to K.
double composite_power_scale(const ScenarioConfig &config)
{
    return config.beamformer == BeamformerChoice::rf_singlecarrier
               ? 1.0 / std::sqrt(static_cast<double>(config.carriers))
               : 1.0;
}

std::size_t effective_carriers_in_gains(const ScenarioConfig &config)
{
    return config.beamformer == BeamformerChoice::rf_singlecarrier ? 1 : config.carriers;
}

CarrierPlan effective_plan(const ScenarioConfig &config)
{
    if (config.beamformer == BeamformerChoice::rf_singlecarrier)
        return CarrierPlan::uniform(
            std::vector<double>(config.carriers, config.plan.wavelength_m.front()));
    return config.plan;
}

} // namespace

TrialOutcome run_trial(const ScenarioConfig &config, double snr_linear, RandomStream &stream)
{
    const std::size_t users = config.users;
    TrialOutcome outcome;
    outcome.sinr.assign(users, 0.0);

    const PathSet paths = sample_paths(stream, users, config.paths, config.geometry.kind);

    const CarrierPlan plan = effective_plan(config);
    const ArrayGeometry rx{ArrayKind::ula, config.rx_antennas, config.geometry.spacing_m};
    const ChannelRealization channels =
        build_channel_realization(paths, config.geometry, rx, plan);

    std::vector<arma::cx_vec> combiners(users,
                                        arma::cx_vec{std::complex<double>(1.0, 0.0)});

    const auto assignment = round_robin_assignment(config.carriers, users);
    const arma::cx_mat rof =
        build_photonic_beamformer(paths, config.geometry, plan, assignment);
    arma::cx_vec oawg;
    if (config.beamformer == BeamformerChoice::rof_multicarrier)
        oawg = build_oawg_weights(config.carriers, users);
    else
        oawg = arma::cx_vec(config.carriers, arma::fill::ones); // modulator stage omitted

    const EffectiveChannel h_p = effective_channel(channels, combiners, rof, oawg);

    const LinkBudget budget = LinkBudget::from_snr(snr_linear, users);

    PrecoderSet set;
    set.rof = rof;
    set.oawg = oawg;
    set.combiners = combiners;
    set.sigma = static_cast<double>(config.carriers);
    try
    {
        set.baseband = config.precoder == PrecoderChoice::zero_forcing
                           ? zf_baseband(h_p)
                           : mmse_baseband(h_p, snr_linear, 1.0);
    }
    catch (const singular_channel_error &)
    {
        outcome.singular = true;
        return outcome;
    }
    set = normalize_total_power(std::move(set));
    set.baseband *= composite_power_scale(config);

    const arma::cx_mat gains = h_p.rows * set.baseband; // K x K composite user gains

    std::vector<double> gain_sq;
    gain_sq.reserve(users * config.paths);
    std::vector<std::complex<double>> interference(users - 1);
    for (std::size_t k = 0; k < users; ++k)
    {
        std::size_t idx = 0;
        for (std::size_t m = 0; m < users; ++m)
            if (m != k)
                interference[idx++] = gains(k, m);
        outcome.sinr[k] = per_user_sinr(gains(k, k), interference, budget, 1.0);
    }
    outcome.se = spectral_efficiency_instant(outcome.sinr);

    for (const auto &user_paths : paths.users)
        for (const Path &path : user_paths)
            gain_sq.push_back(std::norm(path.gain));
    outcome.se_bound =
        se_sum_rate_bound(gain_sq, config.tx_antennas, effective_carriers_in_gains(config),
                          users, config.paths, snr_linear);

    if (config.bits_per_trial > 0)
    {
        const double amplitude = std::sqrt(budget.rho);
        const double noise_scale = std::sqrt(budget.noise_power);
        std::vector<std::complex<double>> align(users);
        for (std::size_t k = 0; k < users; ++k)
        {
            const std::complex<double> g = gains(k, k);
            align[k] = std::abs(g) > 0.0 ? std::conj(g) / std::abs(g)
                                         : std::complex<double>(1.0, 0.0);
        }
        std::vector<double> symbols(users);
        for (std::uint64_t bit = 0; bit < config.bits_per_trial; ++bit)
        {
            for (std::size_t m = 0; m < users; ++m)
                symbols[m] = stream.bit() ? 1.0 : -1.0;
            for (std::size_t k = 0; k < users; ++k)
            {
                std::complex<double> mixed(0.0, 0.0);
                for (std::size_t m = 0; m < users; ++m)
                    mixed += gains(k, m) * symbols[m];
                const std::complex<double> received =
                    amplitude * mixed + noise_scale * stream.cn01();
                const double decision = std::real(received * align[k]) >= 0.0 ? 1.0 : -1.0;
                if (decision != symbols[k])
                    ++outcome.bit_errors;
            }
        }
        outcome.bits = config.bits_per_trial * users;
    }
    return outcome;
}

namespace
{

// In-order compensated accumulator.
struct KahanSum
{
    double sum = 0.0;
    double carry = 0.0;

    void add(double value)
    {
        const double y = value - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

MetricsRecord reduce_point(const ScenarioConfig &config, double snr_db,
                           const std::vector<TrialOutcome> &slots)
{
    MetricsRecord record;
    record.snr_db = snr_db;
    record.trials = slots.size();
    record.sinr_per_user.assign(config.users, 0.0);

    KahanSum se_sum;
    KahanSum se_sq_sum;
    KahanSum bound_sum;
    std::vector<KahanSum> sinr_sums(config.users);
    std::uint64_t errors = 0;
    std::uint64_t bits = 0;
    std::uint64_t valid = 0;

    for (const TrialOutcome &trial : slots)
    {
        if (trial.singular)
        {
            ++record.singular_trials;
            continue;
        }
        ++valid;
        se_sum.add(trial.se);
        se_sq_sum.add(trial.se * trial.se);
        bound_sum.add(trial.se_bound);
        for (std::size_t k = 0; k < config.users; ++k)
            sinr_sums[k].add(trial.sinr[k]);
        errors += trial.bit_errors;
        bits += trial.bits;
    }

    if (valid > 0)
    {
        const double n = static_cast<double>(valid);
        record.se_mean = se_sum.sum / n;
        if (valid > 1)
        {
            const double var =
                std::max(0.0, (se_sq_sum.sum - n * record.se_mean * record.se_mean) / (n - 1.0));
            record.se_stderr = std::sqrt(var / n);
        }
        record.se_bound_eq13 = bound_sum.sum / n;
        for (std::size_t k = 0; k < config.users; ++k)
            record.sinr_per_user[k] = sinr_sums[k].sum / n;
    }
    if (bits > 0)
    {
        const double p = static_cast<double>(errors) / static_cast<double>(bits);
        record.ber_mean = p;
        record.ber_stderr = std::sqrt(p * (1.0 - p) / static_cast<double>(bits));
    }
    record.ber_bound_eq18 =
        ber_high_snr_bound(config.tx_antennas, effective_carriers_in_gains(config),
                           config.users, config.paths, std::pow(10.0, snr_db / 10.0));
    return record;
}

} // namespace

std::vector<MetricsRecord> run_sweep(const ScenarioConfig &config, unsigned workers)
{
    config.validate();
    if (config.experiment != ExperimentKind::monte_carlo)
        throw config_error("run_sweep needs a monte-carlo experiment");

    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());

    std::vector<MetricsRecord> records;
    records.reserve(config.snr_grid_db.size());

    std::vector<TrialOutcome> slots(config.trials);
    for (const double snr_db : config.snr_grid_db)
    {
        const double snr_linear = std::pow(10.0, snr_db / 10.0);

        // every trial owns substream (seed, trial); slot writes keep the
        // aggregate independent of scheduling
        std::atomic<std::uint64_t> next{0};
        constexpr std::uint64_t chunk = 64;
        auto work = [&]
        {
            for (;;)
            {
                const std::uint64_t begin = next.fetch_add(chunk);
                if (begin >= config.trials)
                    return;
                const std::uint64_t end = std::min(begin + chunk, config.trials);
                for (std::uint64_t t = begin; t < end; ++t)
                {
                    RandomStream stream = rng_substream(config.seed, t);
                    slots[t] = run_trial(config, snr_linear, stream);
                }
            }
        };

        if (workers == 1)
        {
            work();
        }
        else
        {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back(work);
            for (auto &thread : pool)
                thread.join();
        }

        records.push_back(reduce_point(config, snr_db, slots));
    }
    return records;
}

double diversity_slope(std::span<const MetricsRecord> records,
                       std::pair<double, double> window_db)
{
    std::vector<std::pair<double, double>> points; // (snr_db / 10, log10 ber)
    for (const MetricsRecord &record : records)
        if (record.snr_db >= window_db.first && record.snr_db <= window_db.second &&
            record.ber_mean > 0.0)
            points.emplace_back(record.snr_db / 10.0, std::log10(record.ber_mean));
    if (points.size() < 2)
        throw argument_error("diversity slope needs at least two in-window points with ber > 0");

    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto &[x, y] : points)
    {
        mean_x += x;
        mean_y += y;
    }
    mean_x /= static_cast<double>(points.size());
    mean_y /= static_cast<double>(points.size());

    double sxy = 0.0;
    double sxx = 0.0;
    for (const auto &[x, y] : points)
    {
        sxy += (x - mean_x) * (y - mean_y);
        sxx += (x - mean_x) * (x - mean_x);
    }
    return -sxy / sxx;
}

} // namespace rofsim
