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

#include "polcal/slc_image.hpp"

#include <filesystem>
#include <string_view>

namespace polcal
{

/// On-disk sample type of the four planes: interleaved little-endian (re, im).
enum class SampleType
{
    c64,
    c128
};

std::string_view to_string(SampleType t);
SampleType sample_type_from_string(std::string_view s);
std::size_t sample_bytes(SampleType t);

inline constexpr int dataset_format_version = 1;

/// Writes meta.json plus hh.bin, hv.bin, vh.bin, vv.bin into `dir` (created if needed).
void write_dataset(const SlcImage &img, const std::filesystem::path &dir, SampleType type = SampleType::c128);

SlcImage read_dataset(const std::filesystem::path &dir);

} // namespace polcal
