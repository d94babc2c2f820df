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

#ifndef rofsim_rng_H
#define rofsim_rng_H

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>

namespace rofsim
{

// Philox4x64 with 10 rounds (Salmon et al., "Parallel random numbers: as
// easy as 1, 2, 3"). Counter-based: the output block is a pure function of
// (key, counter), so statistically independent substreams are obtained by
// placing a substream index into one counter word. Output sequence matches
// NumPy's Philox bit generator word for word, including counter carry.
class Philox4x64
{
  public:
    using result_type = std::uint64_t;

    Philox4x64(std::uint64_t key0, std::uint64_t key1,
               std::array<std::uint64_t, 4> counter = {0ULL, 0ULL, 0ULL, 0ULL})
        : key_{key0, key1}, counter_(counter)
    {
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ULL; }

    result_type operator()()
    {
        if (cursor_ == 4)
        {
            // counter moves first, as in the NumPy bit generator
            increment_counter();
            buffer_ = block(key_, counter_);
            cursor_ = 0;
        }
        return buffer_[static_cast<std::size_t>(cursor_++)];
    }

    // One 4x64 block for the given (key, counter); does not touch state.
    static std::array<std::uint64_t, 4> block(std::array<std::uint64_t, 2> key,
                                              std::array<std::uint64_t, 4> ctr)
    {
        for (int round = 0; round < 10; ++round)
        {
            ctr = single_round(ctr, key);
            key[0] += weyl0;
            key[1] += weyl1;
        }
        return ctr;
    }

  private:
    static constexpr std::uint64_t mult0 = 0xD2E7470EE14C6C93ULL;
    static constexpr std::uint64_t mult1 = 0xCA5A826395121157ULL;
    static constexpr std::uint64_t weyl0 = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t weyl1 = 0xBB67AE8584CAA73BULL;

    static std::array<std::uint64_t, 4> single_round(const std::array<std::uint64_t, 4> &ctr,
                                                     const std::array<std::uint64_t, 2> &key)
    {
        const unsigned __int128 p0 = static_cast<unsigned __int128>(mult0) * ctr[0];
        const unsigned __int128 p1 = static_cast<unsigned __int128>(mult1) * ctr[2];
        const auto lo0 = static_cast<std::uint64_t>(p0);
        const auto hi0 = static_cast<std::uint64_t>(p0 >> 64);
        const auto lo1 = static_cast<std::uint64_t>(p1);
        const auto hi1 = static_cast<std::uint64_t>(p1 >> 64);
        return {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }

    void increment_counter()
    {
        for (auto &word : counter_)
            if (++word != 0)
                break; // carry stops at the first word that did not wrap
    }

    std::array<std::uint64_t, 2> key_;
    std::array<std::uint64_t, 4> counter_;
    std::array<std::uint64_t, 4> buffer_{};
    int cursor_ = 4;
};

// Seeded value stream for one Monte-Carlo trial. The user seed becomes key
// word 0 (key word 1 is a fixed salt) and the substream index sits in
// counter word 1, giving every trial its own 2^64-block counter range.
// Gaussian variates use an explicit Box-Muller transform so that byte-exact
// reproducibility does not depend on standard-library internals.
class RandomStream
{
  public:
    RandomStream(std::uint64_t seed, std::uint64_t substream)
        : gen_(seed, stream_salt, {0ULL, substream, 0ULL, 0ULL})
    {
    }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Two independent N(0,1) variates (Box-Muller).
    std::pair<double, double> normal_pair()
    {
        // radius argument in (0, 1] keeps the log finite
        const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

    // Circularly-symmetric complex Gaussian, zero mean, unit variance
    // (real and imaginary parts are each N(0, 1/2)).
    std::complex<double> cn01()
    {
        const auto [a, b] = normal_pair();
        return {a * inv_sqrt2, b * inv_sqrt2};
    }

    bool bit() { return (next_u64() >> 63) != 0; }

  private:
    static constexpr std::uint64_t stream_salt = 0x9E3779B97F4A7C15ULL;
    static constexpr double inv_sqrt2 = 0.70710678118654752440;

    Philox4x64 gen_;
};

} // namespace rofsim

#endif
