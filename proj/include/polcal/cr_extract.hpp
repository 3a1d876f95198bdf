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

#include <span>

namespace polcal
{

/// Trihedral product matrix [R][T] estimated from image pixels, normalized so
/// that s_cr(0,0) == 1. Absolute radiometric gain is not recovered.
struct CrEstimate
{
    Mat2 s_cr = Mat2::Identity();
    Mat2 s_cr_inv = Mat2::Identity();
    Pixel peak;
    double dominance = 1.0; // lambda_max / trace of the patch covariance
};

inline constexpr int default_cr_patch = 5;

/// Pixel of maximum span inside `window`. Throws on an empty or all-zero window.
Pixel find_peak(const SlcImage &img, const Rect &window);

/// `size` x `size` patch centered on `center`, clipped to the image.
Rect patch_around(const SlcImage &img, Pixel center, int size = default_cr_patch);

/// Dominant eigenvector of the summed lexicographic covariance over all patches
/// (one patch per deployed trihedral), reshaped row-major to 2x2.
CrEstimate estimate_cr_matrix(const SlcImage &img, std::span<const Rect> patches);
CrEstimate estimate_cr_matrix(const SlcImage &img, const Rect &patch);

/// Left-multiplies every pixel by s_cr_inv, leaving T^-1 S T up to the CR gain.
SlcImage remove_receiver(const SlcImage &img, const CrEstimate &cr);

} // namespace polcal
