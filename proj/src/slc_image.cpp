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

#include "polcal/slc_image.hpp"
#include "polcal/error.hpp"

#include <complex>

namespace polcal
{

std::string_view to_string(Stage s)
{
    switch (s)
    {
    case Stage::raw:
        return "raw";
    case Stage::receiver_removed:
        return "receiver-removed";
    case Stage::calibrated:
        return "calibrated";
    }
    return "unknown";
}

Stage stage_from_string(std::string_view s)
{
    if (s == "raw")
        return Stage::raw;
    if (s == "receiver-removed")
        return Stage::receiver_removed;
    if (s == "calibrated")
        return Stage::calibrated;
    throw Error("unknown pipeline stage '" + std::string(s) + "'");
}

SlcImage::SlcImage(int width, int height, Stage stage)
    : width_(width), height_(height), stage_(stage)
{
    if (width <= 0 || height <= 0)
        throw Error("image dimensions must be positive");
    for (auto &p : planes_)
        p.assign(size(), cdouble{});
}

bool SlcImage::contains(const Rect &r) const
{
    return r.w > 0 && r.h > 0 && r.x >= 0 && r.y >= 0 && r.x + r.w <= width_ && r.y + r.h <= height_;
}

ScatteringMatrix SlcImage::at(std::size_t i) const
{
    return {planes_[0][i], planes_[1][i], planes_[2][i], planes_[3][i]};
}

void SlcImage::set(std::size_t i, const ScatteringMatrix &m)
{
    planes_[0][i] = m.hh;
    planes_[1][i] = m.hv;
    planes_[2][i] = m.vh;
    planes_[3][i] = m.vv;
}

double SlcImage::power(std::size_t i) const
{
    return std::norm(planes_[0][i]) + std::norm(planes_[1][i]) + std::norm(planes_[2][i]) +
           std::norm(planes_[3][i]);
}

void require_stage(const SlcImage &img, Stage expected, std::string_view step)
{
    if (img.stage() == expected)
        return;
    if (static_cast<int>(img.stage()) > static_cast<int>(expected))
        throw Error(std::string(step) + " requires " + std::string(to_string(expected)) + " data but input is already " +
                    std::string(to_string(img.stage())));
    std::string producer;
    switch (expected)
    {
    case Stage::raw:
        producer = "simulate/distort";
        break;
    case Stage::receiver_removed:
        producer = "remove-rx";
        break;
    case Stage::calibrated:
        producer = "apply";
        break;
    }
    throw Error(std::string(step) + " requires " + std::string(to_string(expected)) + " data but input is " +
                std::string(to_string(img.stage())) + "; run " + producer + " first");
}

} // namespace polcal
