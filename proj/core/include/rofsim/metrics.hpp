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

#ifndef rofsim_metrics_H
#define rofsim_metrics_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rofsim
{

// SNR bookkeeping. snr = P_s / N_o is the total-power SNR, rho = P_s / K the
// per-user transmit power; rho * K / noise_power == snr must hold.
struct LinkBudget
{
    double snr = 1.0;
    double rho = 1.0;
    double noise_power = 1.0;

    // P_s = 1 convention: rho = 1/K, N_o = 1/snr.
    static LinkBudget from_snr(double snr_linear, std::size_t users);
    void validate(std::size_t users) const;
};

// Aggregated per-SNR-point statistics of a Monte-Carlo sweep, plus the
// closed-form overlays (the CSV columns se_bound_eq13 / ber_bound_eq18).
struct MetricsRecord
{
    double snr_db = 0.0;
    double se_mean = 0.0;
    double se_stderr = 0.0;
    double ber_mean = 0.0;
    double ber_stderr = 0.0;
    std::vector<double> sinr_per_user;
    double se_bound_eq13 = 0.0;
    double ber_bound_eq18 = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t singular_trials = 0;
};

// rho |signal|^2 / (rho sum |interference|^2 + ||w||^2 N_o).
double per_user_sinr(std::complex<double> signal_gain,
                     std::span<const std::complex<double>> interference_gains,
                     const LinkBudget &budget, double combiner_norm_sq);

// Sum over users of log2(1 + SINR_k), bits/s/Hz.
double spectral_efficiency_instant(std::span<const double> sinr_values);

// Closed-form sum-rate bound sum_k sum_l log2(1 + snr M N_r (K-1) g / (L K^2))
// over the squared path gains g = |alpha_{k,l}|^2 (flat, K*L values).
double se_sum_rate_bound(std::span<const double> path_gain_sq, std::size_t tx_antennas,
                         std::size_t carriers, std::size_t users, std::size_t paths,
                         double snr);

// Low-SNR linearization (M N_r / K^2)(K-1) snr log2(e) of the per-user term.
double se_low_snr_approx(std::size_t tx_antennas, std::size_t carriers, std::size_t users,
                         double snr);

// Large-array approximation log2(1 + snr M N_r) of the per-user rate.
double se_massive_mimo_approx(std::size_t tx_antennas, std::size_t carriers, double snr);

// Effective per-user SNR sum_l snr M N_r (K-1) g_l / (L K^2) over one user's
// squared path gains.
double effective_user_snr(std::span<const double> path_gain_sq, std::size_t tx_antennas,
                          std::size_t carriers, std::size_t users, std::size_t paths,
                          double snr);

// Gaussian tail probability Q(x) = erfc(x / sqrt(2)) / 2.
double q_function(double x);

// High-SNR average-BER bound (snr M N_r (K-1) / (L K^2))^(-L); diversity
// order L. Degenerates to +infinity at K < 2 (the (K-1) factor as printed).
double ber_high_snr_bound(std::size_t tx_antennas, std::size_t carriers, std::size_t users,
                          std::size_t paths, double snr);

} // namespace rofsim

#endif
