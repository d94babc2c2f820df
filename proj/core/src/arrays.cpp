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

#include "rofsim/arrays.hpp"

#include "rofsim/errors.hpp"

#include <cmath>
#include <numbers>

namespace rofsim
{

namespace
{
constexpr double two_pi = 2.0 * std::numbers::pi;

std::size_t integer_sqrt(std::size_t n)
{
    auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    while (root * root > n)
        --root;
    while ((root + 1) * (root + 1) <= n)
        ++root;
    return root;
}
} // namespace

std::size_t ArrayGeometry::side() const
{
    const std::size_t root = integer_sqrt(elements);
    if (root * root != elements)
        throw geometry_error("planar array needs a square element count, got M = " +
                             std::to_string(elements));
    return root;
}

void ArrayGeometry::validate() const
{
    if (elements < 1)
        throw geometry_error("array needs at least one element");
    if (!(spacing_m > 0.0))
        throw geometry_error("element spacing must be positive");
    if (kind == ArrayKind::uspa)
        (void)side();
}

void CarrierPlan::validate() const
{
    const std::size_t n = carriers();
    if (n < 1)
        throw argument_error("carrier plan needs at least one wavelength");
    if (subcarrier_ratio.size() != n || fractional_bw.size() != n)
        throw dimension_error("carrier plan fields must all have length N_r = " +
                              std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
    {
        if (!(wavelength_m[i] > 0.0))
            throw argument_error("carrier wavelengths must be positive");
        const double b = fractional_bw[i];
        if (b < 0.0 || b >= 2.0)
            throw argument_error("fractional bandwidth must lie in [0, 2)");
        const double xi = subcarrier_ratio[i];
        if (xi < 1.0 - b / 2.0 - 1e-12 || xi > 1.0 + b / 2.0 + 1e-12)
            throw argument_error("subcarrier ratio xi outside [1 - b/2, 1 + b/2]");
    }
}

CarrierPlan CarrierPlan::single(double lambda_m)
{
    return uniform({lambda_m});
}

CarrierPlan CarrierPlan::uniform(std::vector<double> wavelengths_m)
{
    CarrierPlan plan;
    plan.wavelength_m = std::move(wavelengths_m);
    plan.subcarrier_ratio.assign(plan.wavelength_m.size(), 1.0);
    plan.fractional_bw.assign(plan.wavelength_m.size(), 0.0);
    plan.validate();
    return plan;
}

arma::cx_vec ula_steering(double phi_rad, double lambda_m, const ArrayGeometry &geom)
{
    geom.validate();
    if (geom.kind != ArrayKind::ula)
        throw geometry_error("ula_steering requires a ULA geometry");

    const std::size_t m_count = geom.elements;
    const double step = two_pi / lambda_m * geom.spacing_m * std::sin(phi_rad);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m_count));

    arma::cx_vec v(m_count, arma::fill::none);
    for (std::size_t m = 0; m < m_count; ++m)
        v[m] = std::polar(scale, static_cast<double>(m) * step);
    return v;
}

arma::cx_vec uspa_steering(double azimuth_rad, double elevation_rad, double lambda_m,
                           const ArrayGeometry &geom)
{
    geom.validate();
    if (geom.kind != ArrayKind::uspa)
        throw geometry_error("uspa_steering requires a USPA geometry");

    const std::size_t side = geom.side();
    const double k_d = two_pi / lambda_m * geom.spacing_m;
    const double along = std::sin(azimuth_rad) * std::sin(elevation_rad);
    const double across = std::cos(elevation_rad);
    const double scale = 1.0 / std::sqrt(static_cast<double>(geom.elements));

    arma::cx_vec v(geom.elements, arma::fill::none);
    std::size_t idx = 0;
    for (std::size_t p = 0; p < side; ++p)
        for (std::size_t q = 0; q < side; ++q)
            v[idx++] = std::polar(scale, k_d * (static_cast<double>(p) * along +
                                                static_cast<double>(q) * across));
    return v;
}

arma::cx_vec steering(const ArrayGeometry &geom, double azimuth_rad, double elevation_rad,
                      double lambda_m)
{
    return geom.kind == ArrayKind::ula
               ? ula_steering(azimuth_rad, lambda_m, geom)
               : uspa_steering(azimuth_rad, elevation_rad, lambda_m, geom);
}

double squint_offset(const BeamFocus &focus, double xi)
{
    return xi * std::sin(focus.user_rad) - std::sin(focus.focus_rad);
}

namespace detail
{
std::complex<double> phased_element_sum(std::size_t count, double theta)
{
    const double half = 0.5 * theta;
    const double denom = std::sin(half);
    if (std::abs(denom) < 1e-9)
    {
        // at (or next to) the coherent peak the ratio form is 0/0
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t m = 0; m < count; ++m)
            acc += std::polar(1.0, static_cast<double>(m) * theta);
        return acc;
    }
    const double ratio = std::sin(static_cast<double>(count) * half) / denom;
    return std::polar(ratio, static_cast<double>(count - 1) * half);
}
} // namespace detail

double photonic_array_gain(std::span<const double> offsets, const ArrayGeometry &geom,
                           const CarrierPlan &plan)
{
    geom.validate();
    plan.validate();
    if (offsets.size() != plan.carriers())
        throw dimension_error("need one squint offset per carrier, got " +
                              std::to_string(offsets.size()) + " for N_r = " +
                              std::to_string(plan.carriers()));

    std::complex<double> acc(0.0, 0.0);
    for (std::size_t n = 0; n < plan.carriers(); ++n)
    {
        const double theta = two_pi / plan.wavelength_m[n] * geom.spacing_m * offsets[n];
        acc += detail::phased_element_sum(geom.elements, theta);
    }
    return std::abs(acc) /
           std::sqrt(static_cast<double>(geom.elements * plan.carriers()));
}

double rf_array_gain(double offset, const ArrayGeometry &geom, double lambda_m)
{
    geom.validate();
    const double theta = two_pi / lambda_m * geom.spacing_m * offset;
    return std::abs(detail::phased_element_sum(geom.elements, theta)) /
           std::sqrt(static_cast<double>(geom.elements));
}

double photonic_gain_lower_bound(double offset, const ArrayGeometry &geom,
                                 const CarrierPlan &plan)
{
    geom.validate();
    plan.validate();
    // single-wavelength form: the carriers are assumed to contribute equal gain
    const double lambda = plan.wavelength_m.front();
    const std::complex<double> bound(
        1.0, static_cast<double>(geom.elements - 1) * two_pi / lambda * geom.spacing_m * offset);
    return std::sqrt(static_cast<double>(plan.carriers()) /
                     static_cast<double>(geom.elements)) *
           std::abs(bound);
}

std::vector<BeamPatternRow> beam_pattern_sweep(std::span<const double> angle_grid_rad,
                                               double focus_rad, const ArrayGeometry &geom,
                                               const CarrierPlan &plan, double rf_lambda_m)
{
    geom.validate();
    plan.validate();
    if (angle_grid_rad.empty())
        throw argument_error("beam-pattern sweep needs a nonempty angle grid");

    std::vector<BeamPatternRow> rows;
    rows.reserve(angle_grid_rad.size());
    std::vector<double> offsets(plan.carriers());
    for (const double angle : angle_grid_rad)
    {
        const BeamFocus focus{focus_rad, angle};
        for (std::size_t n = 0; n < plan.carriers(); ++n)
            offsets[n] = squint_offset(focus, plan.subcarrier_ratio[n]);
        rows.push_back({angle, photonic_array_gain(offsets, geom, plan),
                        rf_array_gain(offsets.front(), geom, rf_lambda_m),
                        photonic_gain_lower_bound(offsets.front(), geom, plan)});
    }
    return rows;
}

} // namespace rofsim
