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
#include "polcal/core.hpp"
#include "polcal/cr_extract.hpp"
#include "polcal/error.hpp"
#include "polcal/faraday.hpp"
#include "polcal/scene_sim.hpp"

#include <json.hpp>

#include <filesystem>

// JSON forms of the pipeline artifacts. Complex numbers are [re, im] pairs and
// matrices are arrays of rows; every top-level document has a format_version.

namespace polcal
{

using json = nlohmann::json;

inline constexpr int artifact_format_version = 1;

json complex_to_json(cdouble z);
cdouble complex_from_json(const json &j);

template <int N>
json matrix_to_json(const Eigen::Matrix<cdouble, N, N> &m)
{
    json rows = json::array();
    for (int r = 0; r < N; ++r)
    {
        json row = json::array();
        for (int c = 0; c < N; ++c)
            row.push_back(complex_to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

template <int N>
Eigen::Matrix<cdouble, N, N> matrix_from_json(const json &j)
{
    if (!j.is_array() || j.size() != N)
        throw Error("expected a " + std::to_string(N) + "x" + std::to_string(N) + " complex matrix");
    Eigen::Matrix<cdouble, N, N> m;
    for (int r = 0; r < N; ++r)
    {
        if (!j[r].is_array() || j[r].size() != N)
            throw Error("expected a " + std::to_string(N) + "x" + std::to_string(N) + " complex matrix");
        for (int c = 0; c < N; ++c)
            m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

json to_json(const CrEstimate &cr);
CrEstimate cr_estimate_from_json(const json &j);

json to_json(const CalibrationSolution &sol);
CalibrationSolution calibration_from_json(const json &j);

json to_json(const FaradayConfig &f);
FaradayConfig faraday_from_json(const json &j);

json to_json(const SceneDistortion &d);
/// Accepts a bare distortion object or any document with a "distortion" member.
SceneDistortion distortion_from_json(const json &j);

json to_json(const SceneConfig &cfg);
SceneConfig scene_from_json(const json &j);

/// Ground-truth sidecar written next to a simulated dataset.
json truth_json(const SceneConfig &cfg);

json read_json_file(const std::filesystem::path &file);
void write_json_file(const json &j, const std::filesystem::path &file);

} // namespace polcal
