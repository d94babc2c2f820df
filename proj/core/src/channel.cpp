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

#include "rofsim/channel.hpp"

#include "rofsim/errors.hpp"

#include <cmath>
#include <numbers>

namespace rofsim
{

PathSet sample_paths(RandomStream &stream, std::size_t users, std::size_t paths_per_user,
                     ArrayKind tx_kind)
{
    if (users < 1)
        throw argument_error("sample_paths needs at least one user");
    if (paths_per_user < 1)
        throw argument_error("sample_paths needs at least one path per user");

    constexpr double two_pi = 2.0 * std::numbers::pi;
    constexpr double half_pi = 0.5 * std::numbers::pi;

    PathSet set;
    set.users.resize(users);
    for (auto &paths : set.users)
    {
        paths.resize(paths_per_user);
        for (auto &path : paths)
        {
            path.gain = stream.cn01();
            path.aod_azimuth_rad = stream.uniform(0.0, two_pi);
            path.aod_elevation_rad =
                tx_kind == ArrayKind::uspa ? stream.uniform(-half_pi, half_pi) : 0.0;
            path.aoa_rad = stream.uniform(0.0, two_pi);
        }
    }
    return set;
}

arma::cx_mat geometric_channel(const std::vector<Path> &paths, const ArrayGeometry &tx_geom,
                               const ArrayGeometry &rx_geom, double lambda_m)
{
    tx_geom.validate();
    rx_geom.validate();
    if (paths.empty())
        throw argument_error("geometric_channel needs at least one path");

    const std::size_t m_tx = tx_geom.elements;
    const std::size_t n_rx = rx_geom.elements;
    const double scale = std::sqrt(static_cast<double>(m_tx) * static_cast<double>(n_rx) /
                                   static_cast<double>(paths.size()));

    arma::cx_mat h(n_rx, m_tx, arma::fill::zeros);
    for (const Path &path : paths)
    {
        const arma::cx_vec a_t =
            steering(tx_geom, path.aod_azimuth_rad, path.aod_elevation_rad, lambda_m);
        const arma::cx_vec a_r =
            n_rx == 1 ? arma::cx_vec{std::complex<double>(1.0, 0.0)}
                      : steering(rx_geom, path.aoa_rad, 0.0, lambda_m);
        h += path.gain * a_r * a_t.t();
    }
    return scale * h;
}

arma::cx_mat sv_single_cluster_channel(const std::vector<Path> &paths,
                                       const ArrayGeometry &tx_geom, double lambda_m)
{
    if (tx_geom.kind != ArrayKind::uspa)
        throw geometry_error("single-cluster model expects a planar transmit array");
    const ArrayGeometry rx{ArrayKind::ula, 1, tx_geom.spacing_m};
    return geometric_channel(paths, tx_geom, rx, lambda_m);
}

ChannelRealization build_channel_realization(const PathSet &paths, const ArrayGeometry &tx_geom,
                                             const ArrayGeometry &rx_geom,
                                             const CarrierPlan &plan)
{
    plan.validate();
    ChannelRealization out;
    out.paths = paths;
    out.per_user_per_carrier.resize(paths.user_count());
    for (std::size_t k = 0; k < paths.user_count(); ++k)
    {
        out.per_user_per_carrier[k].reserve(plan.carriers());
        for (std::size_t n = 0; n < plan.carriers(); ++n)
            out.per_user_per_carrier[k].push_back(
                geometric_channel(paths.users[k], tx_geom, rx_geom, plan.wavelength_m[n]));
    }
    return out;
}

double orthogonality_defect(const arma::cx_mat &stacked_rows)
{
    const std::size_t users = stacked_rows.n_rows;
    const std::size_t m_tx = stacked_rows.n_cols;
    if (users > m_tx)
        throw dimension_error("orthogonality defect needs K <= M");

    arma::cx_mat gram = stacked_rows * stacked_rows.t() / static_cast<double>(m_tx);
    gram.diag() -= 1.0;
    return arma::norm(gram, "fro");
}

nlohmann::json path_set_to_json(const PathSet &paths)
{
    nlohmann::json users = nlohmann::json::array();
    for (const auto &user : paths.users)
    {
        nlohmann::json entries = nlohmann::json::array();
        for (const Path &path : user)
            entries.push_back({{"re", path.gain.real()},
                               {"im", path.gain.imag()},
                               {"aod_az", path.aod_azimuth_rad},
                               {"aod_el", path.aod_elevation_rad},
                               {"aoa", path.aoa_rad}});
        users.push_back({{"paths", std::move(entries)}});
    }
    return {{"users", std::move(users)}};
}

PathSet path_set_from_json(const nlohmann::json &doc)
{
    PathSet set;
    for (const auto &user : doc.at("users"))
    {
        std::vector<Path> paths;
        for (const auto &entry : user.at("paths"))
        {
            Path path;
            path.gain = {entry.at("re").get<double>(), entry.at("im").get<double>()};
            path.aod_azimuth_rad = entry.at("aod_az").get<double>();
            path.aod_elevation_rad = entry.at("aod_el").get<double>();
            path.aoa_rad = entry.at("aoa").get<double>();
            paths.push_back(path);
        }
        if (paths.empty())
            throw argument_error("path-set fixture has a user with no paths");
        set.users.push_back(std::move(paths));
    }
    if (set.users.empty())
        throw argument_error("path-set fixture has no users");
    return set;
}

} // namespace rofsim
