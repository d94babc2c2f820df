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

#ifndef rofsim_errors_H
#define rofsim_errors_H

#include <stdexcept>
#include <string>

namespace rofsim
{

// Base class for all library errors.
struct error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Invalid scalar argument (nonpositive noise power, empty list, ...).
struct argument_error : error
{
    using error::error;
};

// Vector/matrix shape or length mismatch.
struct dimension_error : error
{
    using error::error;
};

// Wrong array kind or an impossible layout (e.g. non-square planar array).
struct geometry_error : error
{
    using error::error;
};

// Scenario-level constraint violation; message names the offending field.
struct config_error : error
{
    using error::error;
};

// Effective channel is numerically rank deficient; the Monte-Carlo layer
// flags and counts such trials instead of amplifying noise.
struct singular_channel_error : error
{
    using error::error;
};

// File could not be read or written.
struct io_error : error
{
    using error::error;
};

} // namespace rofsim

#endif
