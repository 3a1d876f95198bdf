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

#include "polcal/calibration.hpp"
#include "polcal/error.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polcal
{

PixelMask power_percentile_mask(const SlcImage &img, double percentile)
{
    if (!(percentile >= 0.0 && percentile < 100.0))
        throw Error("mask percentile must lie in [0, 100)");
    std::vector<double> spans(img.size());
    for (std::size_t i = 0; i < img.size(); ++i)
        spans[i] = img.power(i);

    std::vector<double> sorted = spans;
    const auto rank = static_cast<std::size_t>(percentile / 100.0 * static_cast<double>(sorted.size() - 1));
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(rank), sorted.end());
    const double cut = sorted[rank];

    PixelMask mask(img.size(), 0);
    for (std::size_t i = 0; i < img.size(); ++i)
        mask[i] = spans[i] > cut ? 1 : 0;
    return mask;
}

ReciprocitySolution reciprocity_solve(const SlcImage &img, std::span<const std::uint8_t> mask)
{
    require_stage(img, Stage::receiver_removed, "reciprocity solve");
    if (mask.size() != img.size())
        throw Error("pixel mask size does not match image");

    const auto n = static_cast<Eigen::Index>(std::count_if(mask.begin(), mask.end(), [](auto v) { return v != 0; }));
    if (n < 2)
        throw Error("reciprocity solve needs at least 2 masked pixels, got " + std::to_string(n));

    Eigen::MatrixX2cd z(n, 2);
    Eigen::VectorXcd b(n);
    Eigen::Index row = 0;
    for (std::size_t i = 0; i < img.size(); ++i)
    {
        if (!mask[i])
            continue;
        const Vec4 k = to_pauli(img.at(i)).k;
        z(row, 0) = k(1);
        z(row, 1) = k(2);
        b(row) = -k(3);
        ++row;
    }

    const Eigen::HouseholderQR<Eigen::MatrixX2cd> qr(z);
    const auto r = qr.matrixQR().topLeftCorner<2, 2>();
    const double col0 = z.col(0).norm();
    const double col1 = z.col(1).norm();
    if (col0 == 0.0 || col1 == 0.0 || std::abs(r(1, 1)) <= 1e-10 * col1)
        throw Error("degenerate clutter geometry: z1 and z2 columns are collinear");

    const Eigen::Vector2cd a = qr.solve(b);

    ReciprocitySolution sol;
    sol.a42n = a(0);
    sol.a43n = a(1);
    sol.epsilon = a(1);
    sol.n_pixels = static_cast<std::size_t>(n);
    sol.residual_rms = std::sqrt((z * a - b).squaredNorm() / static_cast<double>(n));
    return sol;
}

cdouble copolar_imbalance(cdouble epsilon, SignChoice sign)
{
    if (std::abs(1.0 + epsilon) < 1e-12)
        throw Error("copolar ratio pole: epsilon == -1");
    cdouble c = std::sqrt((1.0 - epsilon) / (1.0 + epsilon));
    // std::sqrt follows the sign of a signed-zero imaginary part; pin the branch.
    if (c.real() < 0.0 || (c.real() == 0.0 && c.imag() < 0.0))
        c = -c;
    return sign == SignChoice::plus ? c : -c;
}

CrossTalk crosstalk_from_target(const SlcImage &img, Pixel target, const TargetOptions &opts)
{
    require_stage(img, Stage::receiver_removed, "cross-talk estimation");
    if (!img.contains(target))
        throw Error("target pixel outside image bounds");
    if (const auto &f = img.provenance().faraday_deg; f && *f != 0.0 && !opts.allow_faraday)
    {
        std::ostringstream msg;
        msg << "cross-talk estimation from a point target is disabled: data carries " << *f
            << " deg of Faraday rotation, which rotates the target; override to experiment";
        throw Error(msg.str());
    }

    const Vec4 z = to_pauli(img.at(target)).k;
    if (std::abs(z(1)) <= opts.rel_threshold * std::abs(z(0)) + opts.abs_floor)
        throw Error("target has a ~= b, cross-talk unobservable");
    return {z(2) / z(1), z(3) / z(1)};
}

CalibrationSolution assemble_solution(const ReciprocitySolution &recip, const std::optional<CrossTalk> &xtalk,
                                      SignChoice sign)
{
    CalibrationSolution sol;
    sol.sign_choice = sign;
    sol.a42n = recip.a42n;
    sol.a43n = recip.a43n;
    sol.c = copolar_imbalance(recip.epsilon, sign);
    sol.C1 = copolar_C1(sol.c);
    sol.C2 = copolar_C2(sol.c);
    if (std::abs(sol.C1) <= degenerate_threshold)
        throw Error("degenerate calibration matrix: C1 vanishes");

    if (xtalk)
    {
        sol.mode = CalibrationMode::full;
        sol.x2 = xtalk->x2;
        sol.x3 = xtalk->x3;
        sol.x1 = x1_from(sol.x2, sol.x3, sol.c);
    }

    // Weak-coupling inverse with m = 1 and C1 - x1 x2 ~= C1; the last row keeps the
    // normalized reciprocity coefficients so that calibrated k3 is the residual.
    Mat4 a = Mat4::Zero();
    a(0, 0) = 1.0;
    a(1, 1) = 1.0;
    a(1, 2) = -sol.x1 / sol.C1;
    a(2, 1) = -sol.x2 / sol.C1;
    a(2, 2) = 1.0 / sol.C1;
    a(3, 1) = sol.a42n;
    a(3, 2) = sol.a43n;
    a(3, 3) = 1.0;
    sol.A_inv = a;
    return sol;
}

SlcImage apply_calibration(const SlcImage &img, const CalibrationSolution &sol)
{
    require_stage(img, Stage::receiver_removed, "apply");
    SlcImage out = img;
    for (std::size_t i = 0; i < img.size(); ++i)
        out.set(i, from_pauli({sol.A_inv * to_pauli(img.at(i)).k}));
    out.set_stage(Stage::calibrated);
    return out;
}

} // namespace polcal
