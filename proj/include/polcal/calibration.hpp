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
#include "polcal/slc_image.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace polcal
{

/// Least-squares solution of the reciprocity constraint a42n z1 + a43n z2 + z3 = 0
/// over a set of receiver-removed pixels. Both coefficients carry the common
/// normalization 1/(C1 - x1 x2), which is never separated out.
struct ReciprocitySolution
{
    cdouble a42n{};
    cdouble a43n{};
    cdouble epsilon{}; // == a43n
    std::size_t n_pixels = 0;
    double residual_rms = 0.0;
};

/// Branch of the square root in c = +-sqrt((1 - eps)/(1 + eps)).
enum class SignChoice
{
    plus,
    minus
};

enum class CalibrationMode
{
    reciprocity_only,
    full
};

/// Cross ratios read off a symmetric point target.
struct CrossTalk
{
    cdouble x2{};
    cdouble x3{};
};

struct CalibrationSolution
{
    cdouble c = 1.0;
    cdouble C1 = 1.0;
    cdouble C2 = 0.0;
    cdouble x1{}, x2{}, x3{};
    cdouble a42n{}, a43n{};
    Mat4 A_inv = Mat4::Identity();
    SignChoice sign_choice = SignChoice::plus;
    CalibrationMode mode = CalibrationMode::reciprocity_only;
};

/// One byte per pixel, row-major; non-zero selects the pixel.
using PixelMask = std::vector<std::uint8_t>;

/// Pixels whose span exceeds the given percentile (0..100) of all spans.
PixelMask power_percentile_mask(const SlcImage &img, double percentile = 50.0);

ReciprocitySolution reciprocity_solve(const SlcImage &img, std::span<const std::uint8_t> mask);

/// c from eps; the plus branch is the principal root (Re c >= 0, Im c >= 0 when Re c == 0).
cdouble copolar_imbalance(cdouble epsilon, SignChoice sign = SignChoice::plus);

struct TargetOptions
{
    /// |z1| must exceed rel_threshold * |z0| + abs_floor.
    double rel_threshold = 1e3 * std::numeric_limits<double>::epsilon();
    double abs_floor = 1e-12;
    /// Refuse to run when the data carries a non-zero Faraday rotation.
    bool allow_faraday = false;
};

/// x2 = z2/z1 and x3 = z3/z1 at a target with S = diag(a, b), a != b.
CrossTalk crosstalk_from_target(const SlcImage &img, Pixel target, const TargetOptions &opts = {});

CalibrationSolution assemble_solution(const ReciprocitySolution &recip, const std::optional<CrossTalk> &xtalk,
                                      SignChoice sign = SignChoice::plus);

/// k_cal = A_inv k_obs per pixel.
SlcImage apply_calibration(const SlcImage &img, const CalibrationSolution &sol);

} // namespace polcal
