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

#ifndef rofsim_channel_H
#define rofsim_channel_H

#include "rofsim/arrays.hpp"
#include "rofsim/rng.hpp"

#include <armadillo>
#include <complex>
#include <cstddef>
#include <nlohmann/json.hpp>
#include <vector>

namespace rofsim
{

// One propagation path of one user.
struct Path
{
    std::complex<double> gain;      // alpha, CN(0,1) when sampled
    double aod_azimuth_rad = 0.0;   // departure azimuth
    double aod_elevation_rad = 0.0; // departure elevation (planar arrays)
    double aoa_rad = 0.0;           // arrival angle
};

// Per-user path collections; users[k][l] is path l of user k.
struct PathSet
{
    std::vector<std::vector<Path>> users;

    std::size_t user_count() const { return users.size(); }
    std::size_t path_count(std::size_t user) const { return users[user].size(); }
};

// Draws K users with L paths each. Gains are i.i.d. circularly-symmetric
// complex Gaussian with unit variance. Azimuth angles (and arrival angles)
// are uniform on [0, 2 pi]; departure elevations are uniform on
// [-pi/2, pi/2] for planar transmit arrays and zero otherwise.
PathSet sample_paths(RandomStream &stream, std::size_t users, std::size_t paths_per_user,
                     ArrayKind tx_kind);

// Geometric multipath channel of one user,
// H = sqrt(M N / L) sum_l alpha_l a_r(theta_l) a_t(phi_l)^H, an N x M matrix
// with steering vectors evaluated at the given wavelength.
arma::cx_mat geometric_channel(const std::vector<Path> &paths, const ArrayGeometry &tx_geom,
                               const ArrayGeometry &rx_geom, double lambda_m);

// Single-cluster Saleh-Valenzuela channel toward a single-antenna user:
// 1 x M row sqrt(M / L) sum_l alpha_l a_t(az_l, el_l)^H over a planar
// transmit array. Coincides with geometric_channel at N = 1.
arma::cx_mat sv_single_cluster_channel(const std::vector<Path> &paths,
                                       const ArrayGeometry &tx_geom, double lambda_m);

// All users' channel matrices, re-evaluated per optical carrier from one
// shared path set (same scatterers, wavelength-dependent phases).
struct ChannelRealization
{
    // per_user_per_carrier[k][n] is N x M
    std::vector<std::vector<arma::cx_mat>> per_user_per_carrier;
    PathSet paths;

    std::size_t user_count() const { return per_user_per_carrier.size(); }
};

ChannelRealization build_channel_realization(const PathSet &paths, const ArrayGeometry &tx_geom,
                                             const ArrayGeometry &rx_geom,
                                             const CarrierPlan &plan);

// || H H^H / M - I ||_F for a K x M row stack; small when the rows are
// near orthogonal (large-M regime). Requires K <= M.
double orthogonality_defect(const arma::cx_mat &stacked_rows);

// Regression-fixture serialization.
nlohmann::json path_set_to_json(const PathSet &paths);
PathSet path_set_from_json(const nlohmann::json &doc);

} // namespace rofsim

#endif
