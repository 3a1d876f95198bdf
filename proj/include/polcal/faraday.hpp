// SPDX-License-Identifier: Apache-2.0
//
// polcal: Pauli-basis calibration of quad-pol radar scattering-matrix imagery
// Copyright (C) 2026 The polcal authors
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

#pragma once

#include "polcal/core.hpp"

namespace polcal
{

/// Transmitter with copolar imbalance only, preceded by a one-way Faraday rotation:
/// T = R(theta_f) diag(t11d, t22d).
struct FaradayConfig
{
    double theta_deg = 0.0;
    cdouble t11d = 1.0;
    cdouble t22d = 1.0;

    void validate() const;
    cdouble c() const { return t22d / t11d; }
};

/// Plane rotation [[cos, -sin], [sin, cos]].
Mat2 rotation(double theta_deg);

Mat2 faraday_T(const FaradayConfig &cfg);

/// Pauli-basis imbalance matrix with rows [1 0 0 0; 0 1 0 0; 0 0 C1 0; 0 0 C2 1].
Mat4 imbalance_pauli(cdouble c);

/// Exact Pauli action of S -> R(-theta) S R(theta): (k1, k2) turned by 2 theta,
/// k0 and k3 fixed.
Mat4 rotation_pauli(double theta_deg);

/// imbalance_pauli(c) * rotation_pauli(theta): the distortion seen after receiver removal.
Mat4 faraday_pauli(const FaradayConfig &cfg);

/// faraday_pauli factored as cos(2 theta) times a matrix in the sparse A form.
struct EffectiveParams
{
    cdouble x1, x2, x3;
    cdouble C1, C2;
    cdouble a42; // x2 C2 - C1 x3, identically zero
    cdouble a43; // x1 x3 - C2
    cdouble epsilon; // a43 / (C1 - x1 x2)
};

EffectiveParams effective_params(const FaradayConfig &cfg);

/// Undo (or apply) a known residual rotation of a pixel.
PauliVector rotate_pauli(const PauliVector &k, double theta_deg);

} // namespace polcal
