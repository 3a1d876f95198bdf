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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polcal
{

enum class Channel : int
{
    hh = 0,
    hv = 1,
    vh = 2,
    vv = 3
};

inline constexpr std::array<std::string_view, 4> channel_names{"hh", "hv", "vh", "vv"};

/// Processing stage carried by every image; the pipeline only moves forward.
enum class Stage
{
    raw,
    receiver_removed,
    calibrated
};

std::string_view to_string(Stage s);
Stage stage_from_string(std::string_view s);

struct Pixel
{
    int x = 0;
    int y = 0;
    bool operator==(const Pixel &) const = default;
};

struct Rect
{
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    bool contains(Pixel p) const { return p.x >= x && p.x < x + w && p.y >= y && p.y < y + h; }
    long long area() const { return static_cast<long long>(w) * h; }
};

/// Free-form lineage attached to a dataset. The Faraday angle, when known, gates
/// the point-target cross-talk estimator.
struct Provenance
{
    std::vector<std::string> notes;
    std::optional<double> faraday_deg;
};

/// Quad-pol single-look complex raster: four row-major complex planes.
class SlcImage
{
public:
    SlcImage() = default;
    SlcImage(int width, int height, Stage stage = Stage::raw);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return static_cast<std::size_t>(width_) * height_; }
    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width_ + x; }
    bool contains(Pixel p) const { return p.x >= 0 && p.y >= 0 && p.x < width_ && p.y < height_; }
    bool contains(const Rect &r) const;

    Stage stage() const { return stage_; }
    void set_stage(Stage s) { stage_ = s; }

    Provenance &provenance() { return provenance_; }
    const Provenance &provenance() const { return provenance_; }

    std::vector<cdouble> &plane(Channel c) { return planes_[static_cast<int>(c)]; }
    const std::vector<cdouble> &plane(Channel c) const { return planes_[static_cast<int>(c)]; }

    ScatteringMatrix at(std::size_t i) const;
    ScatteringMatrix at(int x, int y) const { return at(index(x, y)); }
    ScatteringMatrix at(Pixel p) const { return at(index(p.x, p.y)); }
    void set(std::size_t i, const ScatteringMatrix &m);
    void set(int x, int y, const ScatteringMatrix &m) { set(index(x, y), m); }

    /// Sum of |channel|^2 at pixel i (the span).
    double power(std::size_t i) const;

private:
    int width_ = 0;
    int height_ = 0;
    Stage stage_ = Stage::raw;
    Provenance provenance_;
    std::array<std::vector<cdouble>, 4> planes_;
};

/// Throws unless `img` is at stage `expected`; `step` names the command that produces it.
void require_stage(const SlcImage &img, Stage expected, std::string_view step);

} // namespace polcal
