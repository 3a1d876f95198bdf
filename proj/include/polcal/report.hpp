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

#include "polcal/json_io.hpp"
#include "polcal/scene_sim.hpp"
#include "polcal/slc_image.hpp"

#include <array>
#include <filesystem>
#include <vector>

namespace polcal
{

/// Image-wide polarimetric summary written to metrics.json.
struct Metrics
{
    Stage stage = Stage::raw;
    std::array<double, 4> pauli_power{}; // mean |k_i|^2
    std::array<double, 4> lex_power{};   // mean |hh|^2, |hv|^2, |vh|^2, |vv|^2
    double reciprocity_ratio = 0.0;      // sum |k3|^2 / sum span
    Pixel peak;
    std::array<double, 4> peak_pauli_power{};
    std::array<double, 3> peak_rel_db{}; // k1, k2, k3 power relative to k0 at the peak
};

Metrics compute_metrics(const SlcImage &img);
json to_json(const Metrics &m);

double to_db(double ratio);

/// Linear scaling clipped at mean + 2.5 std of the raster, quantized to 8 bits.
std::vector<std::uint8_t> quantize_amplitude(const std::vector<double> &amp);

/// Binary 8-bit PGM (P5).
void write_pgm(const std::filesystem::path &file, int width, int height, const std::vector<std::uint8_t> &pixels);

/// k0.pgm .. k3.pgm from a w x w boxcar plus metrics.json.
Metrics write_report(const SlcImage &img, const std::filesystem::path &dir, int boxcar_window = 3);

} // namespace polcal
