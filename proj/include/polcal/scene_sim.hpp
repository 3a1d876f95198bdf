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
#include "polcal/faraday.hpp"
#include "polcal/slc_image.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace polcal
{

using Mat3 = Eigen::Matrix3cd;

/// Distributed scatterer: circular Gaussian speckle with covariance `pauli_cov`
/// over (k0, k1, k2); k3 is always zero. Later classes paint over earlier ones,
/// and pixels outside every region stay zero.
struct ClutterClass
{
    std::string name;
    Rect region;
    Mat3 pauli_cov = Mat3::Zero();
};

enum class TargetKind
{
    trihedral,
    dihedral,
    custom_diag
};

/// Single-pixel scatterer S = diag(a, b).
struct PointTarget
{
    TargetKind kind = TargetKind::trihedral;
    Pixel position;
    cdouble a = 1.0;
    cdouble b = 1.0;

    static PointTarget trihedral(Pixel p, cdouble amplitude) { return {TargetKind::trihedral, p, amplitude, amplitude}; }
    static PointTarget dihedral(Pixel p, cdouble amplitude) { return {TargetKind::dihedral, p, amplitude, -amplitude}; }
    static PointTarget custom(Pixel p, cdouble a, cdouble b) { return {TargetKind::custom_diag, p, a, b}; }

    void validate() const;
};

/// Receiver matrix plus either an explicit transmitter or a Faraday model.
struct SceneDistortion
{
    Mat2 R = Mat2::Identity();
    std::optional<Mat2> T;
    std::optional<FaradayConfig> faraday;

    DistortionPair resolve() const;
    double faraday_deg() const { return faraday ? faraday->theta_deg : 0.0; }
};

struct SceneConfig
{
    int width = 256;
    int height = 256;
    std::vector<ClutterClass> classes;
    std::vector<PointTarget> targets;
    std::optional<SceneDistortion> distortion;
    double snr_db = std::numeric_limits<double>::infinity();
    std::uint64_t seed = 1;

    void validate() const;
};

/// Default desk scene: surface background, a forest stand, a low-backscatter
/// clearing holding a trihedral, and a dihedral on the surface. The class
/// covariances are plausible stand-ins, not measured values.
SceneConfig default_scene(std::uint64_t seed = 1);

/// Square-root factor L (L L^H = cov) from the eigen-decomposition, with small
/// negative eigenvalues clamped. Throws if cov is not Hermitian PSD.
Mat3 covariance_factor(const Mat3 &cov);

/// Seed of RNG substream `stream` for raster row `row`: splitmix64 applied to
/// splitmix64(seed) + stream * 2^32 + row. Rows never share a generator, so
/// results do not depend on the order rows are processed in.
std::uint64_t row_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t row);

SlcImage generate_truth(const SceneConfig &cfg);

/// S_obs = R S T + N. N is i.i.d. circular Gaussian in every channel with a
/// variance set so that mean clutter channel power / noise power equals snr_db.
/// Clutter excludes zero pixels and pixels brighter than 100x the median span.
/// An infinite snr_db adds no noise.
SlcImage distort(const SlcImage &img, const SceneDistortion &d, double snr_db, std::uint64_t seed);
SlcImage distort(const SlcImage &img, const DistortionPair &d, double snr_db, std::uint64_t seed);

/// Mean per-channel power of the clutter pixels (see distort).
double mean_clutter_channel_power(const SlcImage &img);

/// Pauli amplitude rasters |k0|..|k3| after a w x w boxcar on power.
struct PauliAmplitudes
{
    int width = 0;
    int height = 0;
    std::array<std::vector<double>, 4> k;
};

PauliAmplitudes boxcar(const SlcImage &img, int w);

} // namespace polcal
