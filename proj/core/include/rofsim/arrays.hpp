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

#ifndef rofsim_arrays_H
#define rofsim_arrays_H

#include <armadillo>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace rofsim
{

enum class ArrayKind
{
    ula, // uniform linear array
    uspa // uniform square planar array, sqrt(M) x sqrt(M)
};

// Transmit/receive antenna array layout. The phase reference is element
// index 0, so element m carries the relative phase factor with exponent m.
struct ArrayGeometry
{
    ArrayKind kind = ArrayKind::ula;
    std::size_t elements = 1; // M
    double spacing_m = 0.0;   // d, distance between adjacent elements

    // Side length of the planar layout; throws for non-square M.
    std::size_t side() const;
    void validate() const;
};

// The set of optical carriers driving the photonic beamformer: wavelength
// lambda_n, subcarrier-to-carrier ratio xi_n and fractional bandwidth b_n
// per carrier.
struct CarrierPlan
{
    std::vector<double> wavelength_m;
    std::vector<double> subcarrier_ratio; // xi_n, inside [1 - b_n/2, 1 + b_n/2]
    std::vector<double> fractional_bw;    // b_n in [0, 2)

    std::size_t carriers() const { return wavelength_m.size(); }
    void validate() const;

    static CarrierPlan single(double lambda_m);
    // Same wavelength list with xi = 1 and b = 0 everywhere.
    static CarrierPlan uniform(std::vector<double> wavelengths_m);
};

// Steering geometry of one user: where the beam is focused vs. where the
// user actually is (for the carrier under consideration).
struct BeamFocus
{
    double focus_rad = 0.0; // beam focus angle
    double user_rad = 0.0;  // user angle at the carrier
};

// ULA response vector, element m = (1/sqrt(M)) exp(j m (2 pi / lambda) d sin(phi)).
arma::cx_vec ula_steering(double phi_rad, double lambda_m, const ArrayGeometry &geom);

// USPA response vector over the (p, q) grid,
// element (p, q) = (1/sqrt(M)) exp(j (2 pi / lambda) d (p sin(az) sin(el) + q cos(el))).
arma::cx_vec uspa_steering(double azimuth_rad, double elevation_rad, double lambda_m,
                           const ArrayGeometry &geom);

// Kind dispatch; a ULA ignores the elevation argument.
arma::cx_vec steering(const ArrayGeometry &geom, double azimuth_rad, double elevation_rad,
                      double lambda_m);

// Beam-squint offset x = xi * sin(user) - sin(focus).
double squint_offset(const BeamFocus &focus, double xi);

// Multi-carrier photonic array gain
// |(1/sqrt(M N_r)) sum_n sum_m exp(j m (2 pi / lambda_n) d x_n)|,
// one squint offset per carrier. Peaks at sqrt(M N_r) when all offsets vanish.
double photonic_array_gain(std::span<const double> offsets, const ArrayGeometry &geom,
                           const CarrierPlan &plan);

// Single-carrier (narrowband RF) array gain; peaks at sqrt(M).
double rf_array_gain(double offset, const ArrayGeometry &geom, double lambda_m);

// Small-offset closed-form bound |sqrt(N_r/M) (1 + j (M-1) 2 pi d x / lambda_1)|,
// evaluated at the first carrier's wavelength under the identical-gain-per-
// carrier assumption.
double photonic_gain_lower_bound(double offset, const ArrayGeometry &geom,
                                 const CarrierPlan &plan);

struct BeamPatternRow
{
    double angle_rad;
    double gain_photonic;
    double gain_rf;
    double gain_bound;
};

// Evaluates photonic and RF gains (and the closed-form bound) over an angle
// grid for a beam focused at focus_rad. The photonic column peaks at
// sqrt(M N_r) and the RF column at sqrt(M) when the grid contains the focus.
std::vector<BeamPatternRow> beam_pattern_sweep(std::span<const double> angle_grid_rad,
                                               double focus_rad, const ArrayGeometry &geom,
                                               const CarrierPlan &plan, double rf_lambda_m);

namespace detail
{
// sum_{m=0}^{count-1} exp(j m theta). Geometric closed form away from the
// sin(theta/2) = 0 singularity, direct summation at it.
std::complex<double> phased_element_sum(std::size_t count, double theta);
} // namespace detail

} // namespace rofsim

#endif
