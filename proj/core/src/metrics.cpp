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

#include "rofsim/metrics.hpp"

#include "rofsim/errors.hpp"

#include <cmath>
#include <limits>

namespace rofsim
{

namespace
{
constexpr double log2_e = 1.4426950408889634074;

double per_user_gain_factor(std::size_t tx_antennas, std::size_t carriers, std::size_t users,
                            std::size_t paths)
{
    const double k = static_cast<double>(users);
    return static_cast<double>(tx_antennas) * static_cast<double>(carriers) * (k - 1.0) /
           (static_cast<double>(paths) * k * k);
}
} // namespace

LinkBudget LinkBudget::from_snr(double snr_linear, std::size_t users)
{
    if (!(snr_linear > 0.0))
        throw argument_error("snr must be positive");
    if (users < 1)
        throw argument_error("link budget needs at least one user");
    return {snr_linear, 1.0 / static_cast<double>(users), 1.0 / snr_linear};
}

void LinkBudget::validate(std::size_t users) const
{
    if (!(snr > 0.0) || !(rho > 0.0) || !(noise_power > 0.0))
        throw argument_error("link budget entries must be positive");
    const double implied = rho * static_cast<double>(users) / noise_power;
    if (std::abs(implied - snr) > 1e-12 * snr)
        throw argument_error("inconsistent link budget: rho * K / N_o != snr");
}

double per_user_sinr(std::complex<double> signal_gain,
                     std::span<const std::complex<double>> interference_gains,
                     const LinkBudget &budget, double combiner_norm_sq)
{
    if (!(budget.noise_power > 0.0))
        throw argument_error("noise power must be positive");
    double interference = 0.0;
    for (const auto g : interference_gains)
        interference += std::norm(g);
    const double numerator = budget.rho * std::norm(signal_gain);
    const double denominator =
        budget.rho * interference + combiner_norm_sq * budget.noise_power;
    return numerator / denominator;
}

double spectral_efficiency_instant(std::span<const double> sinr_values)
{
    double sum = 0.0;
    for (const double s : sinr_values)
    {
        if (s < 0.0)
            throw argument_error("SINR values must be nonnegative");
        sum += std::log2(1.0 + s);
    }
    return sum;
}

double se_sum_rate_bound(std::span<const double> path_gain_sq, std::size_t tx_antennas,
                         std::size_t carriers, std::size_t users, std::size_t paths,
                         double snr)
{
    if (users < 1)
        throw argument_error("sum-rate bound needs at least one user");
    const double factor = snr * per_user_gain_factor(tx_antennas, carriers, users, paths);
    double sum = 0.0;
    for (const double g : path_gain_sq)
        sum += std::log2(1.0 + factor * g);
    return sum;
}

double se_low_snr_approx(std::size_t tx_antennas, std::size_t carriers, std::size_t users,
                         double snr)
{
    const double k = static_cast<double>(users);
    return static_cast<double>(tx_antennas) * static_cast<double>(carriers) / (k * k) *
           (k - 1.0) * snr * log2_e;
}

double se_massive_mimo_approx(std::size_t tx_antennas, std::size_t carriers, double snr)
{
    return std::log2(1.0 + snr * static_cast<double>(tx_antennas) *
                               static_cast<double>(carriers));
}

double effective_user_snr(std::span<const double> path_gain_sq, std::size_t tx_antennas,
                          std::size_t carriers, std::size_t users, std::size_t paths,
                          double snr)
{
    if (path_gain_sq.empty())
        throw argument_error("effective SNR needs at least one path gain");
    const double factor = snr * per_user_gain_factor(tx_antennas, carriers, users, paths);
    double sum = 0.0;
    for (const double g : path_gain_sq)
        sum += factor * g;
    return sum;
}

double q_function(double x)
{
    return 0.5 * std::erfc(x * 0.70710678118654752440);
}

double ber_high_snr_bound(std::size_t tx_antennas, std::size_t carriers, std::size_t users,
                          std::size_t paths, double snr)
{
    if (users < 2)
        return std::numeric_limits<double>::infinity(); // (K-1) factor as printed
    const double base = snr * per_user_gain_factor(tx_antennas, carriers, users, paths);
    return std::pow(base, -static_cast<double>(paths));
}

} // namespace rofsim
