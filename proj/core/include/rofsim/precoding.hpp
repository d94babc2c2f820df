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

#ifndef rofsim_precoding_H
#define rofsim_precoding_H

#include "rofsim/arrays.hpp"
#include "rofsim/channel.hpp"

#include <armadillo>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace rofsim
{

enum class BasebandKind
{
    zero_forcing,
    mmse
};

// The hybrid precoder factorization: photonic analog stage (rof, constant
// modulus 1/sqrt(M)), per-carrier modulator weights (oawg, applied as a
// diagonal matrix), digital baseband stage (baseband) and the receive
// combiners. sigma is the Gram scale the baseband is assumed to carry when
// evaluating the closed-form residual bound.
struct PrecoderSet
{
    arma::cx_mat rof;                     // M x N_r
    arma::cx_vec oawg;                    // N_r
    arma::cx_mat baseband;                // N_r x K
    std::vector<arma::cx_vec> combiners;  // K vectors of length N
    double sigma = 0.0;

    std::size_t carriers() const { return rof.n_cols; }
    std::size_t users() const { return baseband.n_cols; }
};

// Rows h_p(k, n) = w_k^H H_k^(n) rof[:, n] oawg[n]: the K x N_r channel the
// digital precoder sees after combiner, physical channel, photonic
// beamformer and modulator weights. Each carrier column travels through
// that carrier's channel matrix.
struct EffectiveChannel
{
    arma::cx_mat rows; // K x N_r
};

// carrier n -> user n mod K.
std::vector<std::size_t> round_robin_assignment(std::size_t carriers, std::size_t users);

// Column n is the transmit steering vector toward the strongest path of the
// assigned user, evaluated at carrier n's wavelength; every entry has
// modulus 1/sqrt(M). Requires N_r >= K.
arma::cx_mat build_photonic_beamformer(const PathSet &paths, const ArrayGeometry &tx_geom,
                                       const CarrierPlan &plan,
                                       std::span<const std::size_t> carrier_to_user);

// Uniform modulator weights |f_n| = sqrt(K / N_r) with zero phase, so that
// ||rof diag(f)||_F^2 = K exactly.
arma::cx_vec build_oawg_weights(std::size_t carriers, std::size_t users);

EffectiveChannel effective_channel(const ChannelRealization &channels,
                                   const std::vector<arma::cx_vec> &combiners,
                                   const arma::cx_mat &rof, const arma::cx_vec &oawg);

// Fraction sigma_min / sigma_max of the row stack; the Monte-Carlo layer
// treats anything at or below singular_ratio_floor as a singular draw.
inline constexpr double singular_ratio_floor = 1e-10;

// Right Moore-Penrose pseudoinverse h_p^H (h_p h_p^H)^{-1}, computed via
// SVD. Throws singular_channel_error below the rank floor.
arma::cx_mat zf_baseband(const EffectiveChannel &h_p);

// Regularized inverse h_p^H (h_p h_p^H + (||w||^2 / snr) I)^{-1}; exists for
// every channel and converges to the zero-forcing solution as snr grows.
arma::cx_mat mmse_baseband(const EffectiveChannel &h_p, double snr, double combiner_norm_sq);

arma::cx_mat composite_precoder(const PrecoderSet &set); // rof * diag(oawg) * baseband

// Rescales the baseband so that ||rof diag(oawg) baseband||_F^2 = N_r K.
PrecoderSet normalize_total_power(PrecoderSet set);

// Unconstrained digital reference precoder on the stacked K x M channel,
// normalized to ||F||_F^2 = M K (the all-antennas-as-chains convention).
arma::cx_mat optimal_full_digital(const arma::cx_mat &stacked, BasebandKind kind, double snr);

struct ResidualReport
{
    double residual;    // ||F_opt - rof diag(oawg) baseband||_F^2
    double lower_bound; // |sqrt(N_r K) - sqrt(sigma K)|^2
};

ResidualReport precoder_residual(const arma::cx_mat &f_opt, const PrecoderSet &set);

// Least-squares Gram scale of the baseband and the Frobenius deviation of
// baseband^H baseband from that scaled identity.
std::pair<double, double> baseband_gram_scale(const arma::cx_mat &baseband);

} // namespace rofsim

#endif
