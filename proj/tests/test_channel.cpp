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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rofsim/channel.hpp"
#include "rofsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

using namespace rofsim;

namespace
{
constexpr double pi = std::numbers::pi;
constexpr double lambda = 0.0107;

ArrayGeometry tx_ula(std::size_t m) { return {ArrayKind::ula, m, lambda / 2}; }
ArrayGeometry tx_uspa(std::size_t m) { return {ArrayKind::uspa, m, lambda / 2}; }
ArrayGeometry rx_single() { return {ArrayKind::ula, 1, lambda / 2}; }
} // namespace

TEST_CASE("path sampling statistics")
{
    RandomStream rng(1234, 0);
    const std::size_t draws = 1000000;

    SUBCASE("unit mean squared gain and uniform azimuth")
    {
        // one big user keeps the sampler in a single deterministic order
        const PathSet set = sample_paths(rng, 1, draws, ArrayKind::uspa);
        double power = 0.0;
        std::vector<double> azimuths;
        azimuths.reserve(draws);
        double min_el = 1e9;
        double max_el = -1e9;
        for (const Path &p : set.users[0])
        {
            power += std::norm(p.gain);
            azimuths.push_back(p.aod_azimuth_rad);
            min_el = std::min(min_el, p.aod_elevation_rad);
            max_el = std::max(max_el, p.aod_elevation_rad);
        }
        CHECK(power / draws == doctest::Approx(1.0).epsilon(0.005));
        CHECK(min_el >= -pi / 2);
        CHECK(max_el <= pi / 2);

        // empirical-CDF deviation from uniform on [0, 2 pi]
        std::sort(azimuths.begin(), azimuths.end());
        double worst = 0.0;
        for (std::size_t i = 0; i < azimuths.size(); ++i)
        {
            const double cdf = azimuths[i] / (2 * pi);
            const double lo = static_cast<double>(i) / draws;
            const double hi = static_cast<double>(i + 1) / draws;
            worst = std::max({worst, std::abs(cdf - lo), std::abs(cdf - hi)});
        }
        CHECK(worst < 0.005);
    }

    SUBCASE("fixed seed reproduces the path set")
    {
        RandomStream a(99, 7);
        RandomStream b(99, 7);
        const PathSet first = sample_paths(a, 3, 4, ArrayKind::uspa);
        const PathSet second = sample_paths(b, 3, 4, ArrayKind::uspa);
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t l = 0; l < 4; ++l)
            {
                CHECK(first.users[k][l].gain == second.users[k][l].gain);
                CHECK(first.users[k][l].aod_azimuth_rad == second.users[k][l].aod_azimuth_rad);
                CHECK(first.users[k][l].aod_elevation_rad ==
                      second.users[k][l].aod_elevation_rad);
                CHECK(first.users[k][l].aoa_rad == second.users[k][l].aoa_rad);
            }
    }

    SUBCASE("ULA sampling has no elevation")
    {
        RandomStream r(3, 1);
        const PathSet set = sample_paths(r, 2, 3, ArrayKind::ula);
        for (const auto &user : set.users)
            for (const Path &p : user)
                CHECK(p.aod_elevation_rad == 0.0);
    }

    SUBCASE("argument validation")
    {
        RandomStream r(3, 1);
        CHECK_THROWS_AS(sample_paths(r, 0, 1, ArrayKind::ula), argument_error);
        CHECK_THROWS_AS(sample_paths(r, 1, 0, ArrayKind::ula), argument_error);
    }
}

TEST_CASE("geometric channel closed forms")
{
    SUBCASE("single path, unit gain, two antennas")
    {
        std::vector<Path> paths{{{1.0, 0.0}, 0.7, 0.0, 1.1}};
        const arma::cx_mat h = geometric_channel(paths, tx_ula(2), rx_single(), lambda);
        REQUIRE(h.n_rows == 1);
        REQUIRE(h.n_cols == 2);
        CHECK(arma::norm(h, "fro") == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    }

    SUBCASE("rank-one frobenius identity")
    {
        std::vector<Path> paths{{{0.3, -1.2}, 2.0, 0.0, 0.4}};
        const arma::cx_mat h = geometric_channel(paths, tx_ula(8), rx_single(), lambda);
        const double want = 8.0 * 1.0 * std::norm(std::complex<double>(0.3, -1.2));
        CHECK(arma::accu(arma::square(arma::abs(h))) == doctest::Approx(want).epsilon(1e-9));
    }

    SUBCASE("per-user norm identity holds exactly for single-path draws")
    {
        RandomStream rng(17, 2);
        const std::size_t users = 4;
        const std::size_t m = 16;
        const PathSet set = sample_paths(rng, users, 1, ArrayKind::ula);
        for (std::size_t k = 0; k < users; ++k)
        {
            const arma::cx_mat h =
                geometric_channel(set.users[k], tx_ula(m), rx_single(), lambda);
            const double ratio =
                arma::accu(arma::square(arma::abs(h))) /
                (static_cast<double>(m) * std::norm(set.users[k][0].gain));
            CHECK(ratio == doctest::Approx(1.0).epsilon(1e-9));
        }
    }

    SUBCASE("multipath norm identity holds in expectation only")
    {
        // inter-path cross terms keep the per-realization ratio off 1
        RandomStream rng(18, 2);
        const std::size_t draws = 4000;
        const std::size_t m = 16;
        const std::size_t paths_per_user = 3;
        double ratio_sum = 0.0;
        for (std::size_t i = 0; i < draws; ++i)
        {
            const PathSet set = sample_paths(rng, 1, paths_per_user, ArrayKind::ula);
            double alpha_power = 0.0;
            for (const Path &p : set.users[0])
                alpha_power += std::norm(p.gain);
            const arma::cx_mat h =
                geometric_channel(set.users[0], tx_ula(m), rx_single(), lambda);
            ratio_sum += arma::accu(arma::square(arma::abs(h))) *
                         static_cast<double>(paths_per_user) /
                         (static_cast<double>(m) * alpha_power);
        }
        CHECK(ratio_sum / draws == doctest::Approx(1.0).epsilon(0.05));
    }

    SUBCASE("linearity in a path gain")
    {
        std::vector<Path> paths{{{0.5, 0.25}, 1.0, 0.0, 0.2},
                                {{-0.75, 1.5}, 2.2, 0.0, 1.9}};
        const arma::cx_mat base = geometric_channel(paths, tx_ula(8), rx_single(), lambda);
        // doubling one gain adds exactly that path's rank-one term once more
        std::vector<Path> doubled = paths;
        doubled[1].gain *= 2.0;
        const arma::cx_mat with_doubled =
            geometric_channel(doubled, tx_ula(8), rx_single(), lambda);
        // the lone-path channel carries sqrt(M N / 1); the two-path terms
        // carry sqrt(M N / 2), so the difference is that term over sqrt(2)
        std::vector<Path> only_second{paths[1]};
        const arma::cx_mat second_term =
            geometric_channel(only_second, tx_ula(8), rx_single(), lambda);
        const arma::cx_mat diff = with_doubled - base;
        CHECK(arma::norm(diff - second_term / std::sqrt(2.0), "fro") <
              1e-12 * arma::norm(base, "fro"));
    }

    SUBCASE("rank bounded by path count")
    {
        RandomStream rng(5, 5);
        const ArrayGeometry rx{ArrayKind::ula, 4, lambda / 2};
        const PathSet set = sample_paths(rng, 1, 2, ArrayKind::ula);
        const arma::cx_mat h = geometric_channel(set.users[0], tx_ula(16), rx, lambda);
        const arma::vec s = arma::svd(h);
        CHECK(s.n_elem == 4);
        CHECK(s[2] < 1e-8 * s[0]);
        CHECK(s[3] < 1e-8 * s[0]);
    }

    SUBCASE("expected squared frobenius norm is M N")
    {
        RandomStream rng(31, 0);
        const std::size_t draws = 10000;
        const std::size_t m = 8;
        double total = 0.0;
        double total_sq = 0.0;
        for (std::size_t i = 0; i < draws; ++i)
        {
            const PathSet set = sample_paths(rng, 1, 2, ArrayKind::ula);
            const double value = arma::accu(arma::square(
                arma::abs(geometric_channel(set.users[0], tx_ula(m), rx_single(), lambda))));
            total += value;
            total_sq += value * value;
        }
        const double mean = total / draws;
        const double stderr_est = std::sqrt(
            (total_sq / draws - mean * mean) / static_cast<double>(draws));
        CHECK(std::abs(mean - static_cast<double>(m)) < 3.0 * stderr_est);
    }
}

TEST_CASE("single-cluster channel")
{
    SUBCASE("matches the geometric channel at one path")
    {
        std::vector<Path> paths{{{0.8, 0.6}, 1.2, 0.4, 2.0}};
        const arma::cx_mat a = sv_single_cluster_channel(paths, tx_uspa(16), lambda);
        const arma::cx_mat b = geometric_channel(paths, tx_uspa(16), rx_single(), lambda);
        CHECK(arma::norm(a - b, "fro") < 1e-14);
    }

    SUBCASE("unit-gain scaling")
    {
        std::vector<Path> paths{{{1.0, 0.0}, 0.9, -0.3, 0.0}};
        const arma::cx_mat h = sv_single_cluster_channel(paths, tx_uspa(16), lambda);
        CHECK(arma::norm(h, "fro") == doctest::Approx(4.0).epsilon(1e-12));
    }

    SUBCASE("random instance matches a per-ray accumulation oracle")
    {
        RandomStream rng(8, 8);
        const PathSet set = sample_paths(rng, 1, 5, ArrayKind::uspa);
        const ArrayGeometry tx = tx_uspa(16);
        const arma::cx_mat h = sv_single_cluster_channel(set.users[0], tx, lambda);

        arma::cx_mat oracle(1, 16, arma::fill::zeros);
        for (const Path &p : set.users[0])
        {
            const arma::cx_vec a =
                uspa_steering(p.aod_azimuth_rad, p.aod_elevation_rad, lambda, tx);
            oracle += p.gain * a.t();
        }
        oracle *= std::sqrt(16.0 / 5.0);
        CHECK(arma::norm(h - oracle, "fro") < 1e-12);
    }

    SUBCASE("rejects non-planar transmit arrays")
    {
        std::vector<Path> paths{{{1.0, 0.0}, 0.0, 0.0, 0.0}};
        CHECK_THROWS_AS(sv_single_cluster_channel(paths, tx_ula(16), lambda),
                        geometry_error);
    }
}

TEST_CASE("per-carrier realizations are pure functions of the path set")
{
    RandomStream rng(21, 4);
    const PathSet set = sample_paths(rng, 2, 2, ArrayKind::ula);
    const auto plan = CarrierPlan::uniform({10.7e-3, 7.1e-3});
    const ChannelRealization first =
        build_channel_realization(set, tx_ula(8), rx_single(), plan);
    const ChannelRealization second =
        build_channel_realization(set, tx_ula(8), rx_single(), plan);
    REQUIRE(first.user_count() == 2);
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t n = 0; n < 2; ++n)
        {
            CHECK(arma::norm(first.per_user_per_carrier[k][n] -
                                 second.per_user_per_carrier[k][n],
                             "fro") == 0.0);
        }
    // distinct wavelengths give distinct phase structure
    CHECK(arma::norm(first.per_user_per_carrier[0][0] - first.per_user_per_carrier[0][1],
                     "fro") > 1e-6);
}

TEST_CASE("orthogonality defect")
{
    SUBCASE("scaled standard basis rows are exactly orthogonal")
    {
        arma::cx_mat h(3, 8, arma::fill::zeros);
        h(0, 1) = std::sqrt(8.0);
        h(1, 4) = std::sqrt(8.0);
        h(2, 6) = std::sqrt(8.0);
        CHECK(orthogonality_defect(h) == doctest::Approx(0.0).epsilon(1e-15));
    }

    SUBCASE("scalar reduction at one user")
    {
        arma::cx_mat h(1, 4, arma::fill::ones);
        // ||h||^2 / M - 1 = 4/4 - 1 = 0
        CHECK(orthogonality_defect(h) == doctest::Approx(0.0).epsilon(1e-15));
        h *= 2.0;
        CHECK(orthogonality_defect(h) == doctest::Approx(3.0).epsilon(1e-12));
    }

    SUBCASE("wide stacks are rejected")
    {
        arma::cx_mat h(5, 3, arma::fill::ones);
        CHECK_THROWS_AS(orthogonality_defect(h), dimension_error);
    }

    SUBCASE("large arrays make random LOS rows nearly orthogonal")
    {
        RandomStream rng(77, 0);
        const std::size_t m = 1024;
        const ArrayGeometry tx = tx_ula(m);
        double total = 0.0;
        const int draws = 100;
        for (int i = 0; i < draws; ++i)
        {
            const PathSet set = sample_paths(rng, 3, 1, ArrayKind::ula);
            arma::cx_mat rows(3, m, arma::fill::none);
            for (std::size_t k = 0; k < 3; ++k)
            {
                const Path &p = set.users[k][0];
                // unit-modulus gain isolates steering-row orthogonality
                const std::complex<double> phase = p.gain / std::abs(p.gain);
                rows.row(k) = std::sqrt(static_cast<double>(m)) * phase *
                              ula_steering(p.aod_azimuth_rad, lambda, tx).t();
            }
            total += orthogonality_defect(rows);
        }
        CHECK(total / draws < 0.15);
    }
}

TEST_CASE("path set fixtures round-trip through json")
{
    RandomStream rng(13, 13);
    const PathSet set = sample_paths(rng, 2, 3, ArrayKind::uspa);
    const nlohmann::json doc = path_set_to_json(set);
    const PathSet back = path_set_from_json(doc);
    REQUIRE(back.user_count() == 2);
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 3; ++l)
        {
            CHECK(back.users[k][l].gain == set.users[k][l].gain);
            CHECK(back.users[k][l].aod_azimuth_rad == set.users[k][l].aod_azimuth_rad);
            CHECK(back.users[k][l].aod_elevation_rad == set.users[k][l].aod_elevation_rad);
            CHECK(back.users[k][l].aoa_rad == set.users[k][l].aoa_rad);
        }

    CHECK_THROWS_AS(path_set_from_json(nlohmann::json{{"users", nlohmann::json::array()}}),
                    argument_error);
}
