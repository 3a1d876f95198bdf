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

#include "polcal/cr_extract.hpp"
#include "polcal/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <string>

namespace polcal
{

Pixel find_peak(const SlcImage &img, const Rect &window)
{
    if (window.w <= 0 || window.h <= 0)
        throw Error("empty peak search window");
    if (!img.contains(window))
        throw Error("peak search window outside image bounds");

    Pixel best{window.x, window.y};
    double best_power = 0.0;
    for (int y = window.y; y < window.y + window.h; ++y)
        for (int x = window.x; x < window.x + window.w; ++x)
        {
            const double p = img.power(img.index(x, y));
            if (p > best_power)
            {
                best_power = p;
                best = {x, y};
            }
        }
    if (best_power == 0.0)
        throw Error("peak search window contains no signal");
    return best;
}

Rect patch_around(const SlcImage &img, Pixel center, int size)
{
    if (size < 1)
        throw Error("patch size must be positive");
    const int half = size / 2;
    const int x0 = std::max(0, center.x - half);
    const int y0 = std::max(0, center.y - half);
    const int x1 = std::min(img.width(), center.x - half + size);
    const int y1 = std::min(img.height(), center.y - half + size);
    return {x0, y0, x1 - x0, y1 - y0};
}

CrEstimate estimate_cr_matrix(const SlcImage &img, std::span<const Rect> patches)
{
    if (patches.empty())
        throw Error("no reflector patch given");

    Mat4 cov = Mat4::Zero();
    long long count = 0;
    Pixel peak;
    double peak_power = -1.0;
    for (const Rect &r : patches)
    {
        if (!img.contains(r))
            throw Error("reflector patch outside image bounds");
        for (int y = r.y; y < r.y + r.h; ++y)
            for (int x = r.x; x < r.x + r.w; ++x)
            {
                const std::size_t i = img.index(x, y);
                const Vec4 s = LexVector::from(img.at(i)).s;
                cov.noalias() += s * s.adjoint();
                if (const double p = img.power(i); p > peak_power)
                {
                    peak_power = p;
                    peak = {x, y};
                }
                ++count;
            }
    }
    if (count < 4)
        throw Error("reflector patch needs at least 4 pixels, got " + std::to_string(count));

    // The sum of outer products is Hermitian by construction.
    cov = (0.5 * (cov + cov.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<Mat4> eig(cov);
    if (eig.info() != Eigen::Success)
        throw Error("eigen-decomposition of reflector covariance failed");

    // Eigenvalues ascend.
    const auto &lambda = eig.eigenvalues();
    const double l_max = lambda(3);
    const double l_next = lambda(2);
    if (!(l_max > 0.0) || (l_max - l_next) <= 1e-6 * l_max)
        throw Error("ambiguous reflector estimate");

    Vec4 v = eig.eigenvectors().col(3);
    if (std::abs(v(0)) < 1e-9 * v.norm())
        throw Error("cannot normalize reflector estimate: hh entry vanishes");
    v /= v(0);
    v(0) = 1.0;

    CrEstimate est;
    est.s_cr = unvec_row_major(v);
    est.s_cr_inv = inverse_checked(est.s_cr);
    est.peak = peak;
    est.dominance = std::clamp(l_max / lambda.sum(), 0.0, 1.0);
    return est;
}

CrEstimate estimate_cr_matrix(const SlcImage &img, const Rect &patch)
{
    return estimate_cr_matrix(img, std::span<const Rect>(&patch, 1));
}

SlcImage remove_receiver(const SlcImage &img, const CrEstimate &cr)
{
    require_stage(img, Stage::raw, "remove-rx");
    SlcImage out = img;
    for (std::size_t i = 0; i < img.size(); ++i)
        out.set(i, ScatteringMatrix::from_matrix(cr.s_cr_inv * img.at(i).matrix()));
    out.set_stage(Stage::receiver_removed);
    return out;
}

} // namespace polcal
