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

#include "polcal/faraday.hpp"
#include "polcal/error.hpp"

#include <cmath>
#include <numbers>

namespace polcal
{

namespace
{

double to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

} // namespace

void FaradayConfig::validate() const
{
    if (t11d == 0.0 || t22d == 0.0)
        throw Error("Faraday model needs non-zero diagonal gains t11d, t22d");
}

Mat2 rotation(double theta_deg)
{
    const double th = to_rad(theta_deg);
    Mat2 r;
    r << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
    return r;
}

Mat2 faraday_T(const FaradayConfig &cfg)
{
    Mat2 td = Mat2::Zero();
    td(0, 0) = cfg.t11d;
    td(1, 1) = cfg.t22d;
    return rotation(cfg.theta_deg) * td;
}

Mat4 imbalance_pauli(cdouble c)
{
    Mat4 d = Mat4::Identity();
    d(2, 2) = copolar_C1(c);
    d(3, 2) = copolar_C2(c);
    return d;
}

Mat4 rotation_pauli(double theta_deg)
{
    const double th2 = 2.0 * to_rad(theta_deg);
    Mat4 r = Mat4::Identity();
    r(1, 1) = std::cos(th2);
    r(1, 2) = std::sin(th2);
    r(2, 1) = -std::sin(th2);
    r(2, 2) = std::cos(th2);
    return r;
}

Mat4 faraday_pauli(const FaradayConfig &cfg)
{
    cfg.validate();
    return imbalance_pauli(cfg.c()) * rotation_pauli(cfg.theta_deg);
}

EffectiveParams effective_params(const FaradayConfig &cfg)
{
    cfg.validate();
    const double th2 = 2.0 * to_rad(cfg.theta_deg);
    if (std::abs(std::cos(th2)) < 1e-12)
        throw Error("rotation singular: 2 theta_f is +-90 deg");
    const double tn = std::tan(th2);
    const cdouble c = cfg.c();

    EffectiveParams p;
    p.C1 = copolar_C1(c);
    p.C2 = copolar_C2(c);
    p.x1 = tn;
    p.x2 = -p.C1 * tn;
    p.x3 = -p.C2 * tn;
    p.a42 = p.x2 * p.C2 - p.C1 * p.x3;
    p.a43 = p.x1 * p.x3 - p.C2;
    p.epsilon = p.a43 / (p.C1 - p.x1 * p.x2);
    return p;
}

PauliVector rotate_pauli(const PauliVector &k, double theta_deg)
{
    return {rotation_pauli(theta_deg) * k.k};
}

} // namespace polcal
