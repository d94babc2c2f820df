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

#include "rofsim/precoding.hpp"

#include "rofsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace rofsim
{

namespace
{
// Right pseudoinverse through the economy SVD; also enforces the rank floor.
arma::cx_mat right_pinv(const arma::cx_mat &rows)
{
    arma::cx_mat u;
    arma::vec s;
    arma::cx_mat v;
    if (!arma::svd_econ(u, s, v, rows))
        throw singular_channel_error("SVD of the effective channel failed");
    if (s.empty() || s.front() <= 0.0 || s.back() <= singular_ratio_floor * s.front())
        throw singular_channel_error("effective channel is numerically rank deficient");
    return v * arma::diagmat(1.0 / s) * u.t();
}
} // namespace

std::vector<std::size_t> round_robin_assignment(std::size_t carriers, std::size_t users)
{
    if (users < 1)
        throw argument_error("round-robin assignment needs at least one user");
    std::vector<std::size_t> map(carriers);
    for (std::size_t n = 0; n < carriers; ++n)
        map[n] = n % users;
    return map;
}

arma::cx_mat build_photonic_beamformer(const PathSet &paths, const ArrayGeometry &tx_geom,
                                       const CarrierPlan &plan,
                                       std::span<const std::size_t> carrier_to_user)
{
    tx_geom.validate();
    plan.validate();
    if (plan.carriers() < paths.user_count())
        throw config_error("need at least as many carriers as users (K <= N_r)");
    if (carrier_to_user.size() != plan.carriers())
        throw dimension_error("carrier-to-user map must cover every carrier");

    arma::cx_mat rof(tx_geom.elements, plan.carriers(), arma::fill::none);
    for (std::size_t n = 0; n < plan.carriers(); ++n)
    {
        const std::size_t user = carrier_to_user[n];
        if (user >= paths.user_count())
            throw dimension_error("carrier assigned to a user outside the path set");
        const auto &user_paths = paths.users[user];
        const auto strongest = std::max_element(
            user_paths.begin(), user_paths.end(), [](const Path &a, const Path &b)
            { return std::abs(a.gain) < std::abs(b.gain); });
        rof.col(n) = steering(tx_geom, strongest->aod_azimuth_rad,
                              strongest->aod_elevation_rad, plan.wavelength_m[n]);
    }
    return rof;
}

arma::cx_vec build_oawg_weights(std::size_t carriers, std::size_t users)
{
    arma::cx_vec weights(carriers, arma::fill::none);
    weights.fill(std::sqrt(static_cast<double>(users) / static_cast<double>(carriers)));
    return weights;
}

EffectiveChannel effective_channel(const ChannelRealization &channels,
                                   const std::vector<arma::cx_vec> &combiners,
                                   const arma::cx_mat &rof, const arma::cx_vec &oawg)
{
    const std::size_t users = channels.user_count();
    const std::size_t carriers = rof.n_cols;
    if (combiners.size() != users)
        throw dimension_error("need one combiner per user");
    if (oawg.n_elem != carriers)
        throw dimension_error("need one modulator weight per carrier");

    EffectiveChannel eff;
    eff.rows.set_size(users, carriers);
    for (std::size_t k = 0; k < users; ++k)
    {
        if (channels.per_user_per_carrier[k].size() != carriers)
            throw dimension_error("channel realization does not cover every carrier");
        for (std::size_t n = 0; n < carriers; ++n)
        {
            const arma::cx_mat &h = channels.per_user_per_carrier[k][n];
            if (h.n_rows != combiners[k].n_elem || h.n_cols != rof.n_rows)
                throw dimension_error("channel matrix shape does not match combiner/beamformer");
            eff.rows(k, n) =
                arma::cdot(combiners[k], h * rof.col(n)) * oawg[n];
        }
    }
    return eff;
}

arma::cx_mat zf_baseband(const EffectiveChannel &h_p)
{
    return right_pinv(h_p.rows);
}

arma::cx_mat mmse_baseband(const EffectiveChannel &h_p, double snr, double combiner_norm_sq)
{
    if (!(snr > 0.0))
        throw argument_error("MMSE baseband needs snr > 0");
    const arma::cx_mat &rows = h_p.rows;
    arma::cx_mat gram = rows * rows.t();
    gram.diag() += combiner_norm_sq / snr;
    const arma::cx_mat x = arma::solve(gram, rows, arma::solve_opts::likely_sympd);
    return x.t();
}

arma::cx_mat composite_precoder(const PrecoderSet &set)
{
    return set.rof * arma::diagmat(set.oawg) * set.baseband;
}

PrecoderSet normalize_total_power(PrecoderSet set)
{
    const double norm = arma::norm(composite_precoder(set), "fro");
    if (!(norm > 0.0))
        throw argument_error("cannot normalize a zero composite precoder");
    const double target = static_cast<double>(set.carriers() * set.users());
    set.baseband *= std::sqrt(target) / norm;
    return set;
}

arma::cx_mat optimal_full_digital(const arma::cx_mat &stacked, BasebandKind kind, double snr)
{
    arma::cx_mat f;
    if (kind == BasebandKind::zero_forcing)
    {
        f = right_pinv(stacked);
    }
    else
    {
        if (!(snr > 0.0))
            throw argument_error("MMSE reference precoder needs snr > 0");
        arma::cx_mat gram = stacked * stacked.t();
        gram.diag() += 1.0 / snr;
        f = arma::cx_mat(arma::solve(gram, stacked, arma::solve_opts::likely_sympd)).t();
    }
    const double norm = arma::norm(f, "fro");
    if (!(norm > 0.0))
        throw argument_error("reference precoder collapsed to zero");
    const double target = static_cast<double>(stacked.n_cols * stacked.n_rows); // M K
    return f * (std::sqrt(target) / norm);
}

ResidualReport precoder_residual(const arma::cx_mat &f_opt, const PrecoderSet &set)
{
    const arma::cx_mat composite = composite_precoder(set);
    if (f_opt.n_rows != composite.n_rows || f_opt.n_cols != composite.n_cols)
        throw dimension_error("reference precoder shape does not match the composite");

    const double residual = arma::accu(arma::square(arma::abs(f_opt - composite)));
    const double users = static_cast<double>(set.users());
    const double carriers = static_cast<double>(set.carriers());
    const double diff = std::sqrt(carriers * users) - std::sqrt(set.sigma * users);
    return {residual, diff * diff};
}

std::pair<double, double> baseband_gram_scale(const arma::cx_mat &baseband)
{
    const arma::cx_mat gram = baseband.t() * baseband;
    const double users = static_cast<double>(baseband.n_cols);
    const double sigma = arma::trace(arma::real(gram)) / users;
    arma::cx_mat deviation = gram;
    deviation.diag() -= sigma;
    return {sigma, arma::norm(deviation, "fro")};
}

} // namespace rofsim
