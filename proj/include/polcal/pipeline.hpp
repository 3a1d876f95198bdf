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

#include "polcal/calibration.hpp"
#include "polcal/cr_extract.hpp"
#include "polcal/dataset.hpp"
#include "polcal/report.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>

// File-to-file pipeline stages behind the polcal command line. Each stage is a
// pure function of its input files and arguments.

namespace polcal::pipeline
{

namespace fs = std::filesystem;

/// Truth dataset in `out` plus truth.json.
void simulate(const fs::path &config, const fs::path &out, std::optional<std::uint64_t> seed = {},
              SampleType type = SampleType::c128);

/// snr_db defaults to the document's "snr_db" member, else noise-free.
void distort(const fs::path &in, const fs::path &distortion, std::optional<double> snr_db, const fs::path &out,
             std::uint64_t seed = 1, SampleType type = SampleType::c128);

CrEstimate extract_cr(const fs::path &in, const Rect &window, const fs::path &out_json,
                      int patch = default_cr_patch);

void remove_rx(const fs::path &in, const fs::path &cr_json, const fs::path &out, SampleType type = SampleType::c128);

struct SolveOptions
{
    double mask_percentile = 50.0;
    std::optional<Pixel> target;
    SignChoice sign = SignChoice::plus;
    bool allow_faraday_target = false;
};

CalibrationSolution solve(const fs::path &in, const SolveOptions &opts, const fs::path &out_json);

void apply(const fs::path &in, const fs::path &cal_json, const fs::path &out, SampleType type = SampleType::c128);

Metrics report(const fs::path &in, const fs::path &out_dir, int boxcar_window = 3);

} // namespace polcal::pipeline
