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

#include "polcal/pipeline.hpp"
#include "polcal/error.hpp"
#include "polcal/json_io.hpp"
#include "polcal/scene_sim.hpp"

#include <limits>

namespace polcal::pipeline
{

void simulate(const fs::path &config, const fs::path &out, std::optional<std::uint64_t> seed, SampleType type)
{
    SceneConfig cfg = scene_from_json(read_json_file(config));
    if (seed)
        cfg.seed = *seed;
    const SlcImage truth = generate_truth(cfg);
    write_dataset(truth, out, type);
    write_json_file(truth_json(cfg), out / "truth.json");
}

void distort(const fs::path &in, const fs::path &distortion, std::optional<double> snr_db, const fs::path &out,
             std::uint64_t seed, SampleType type)
{
    const SlcImage img = read_dataset(in);
    require_stage(img, Stage::raw, "distort");
    const json doc = read_json_file(distortion);
    const SceneDistortion d = distortion_from_json(doc);

    double snr = std::numeric_limits<double>::infinity();
    if (snr_db)
        snr = *snr_db;
    else if (doc.contains("snr_db") && doc["snr_db"].is_number())
        snr = doc["snr_db"].get<double>();

    write_dataset(polcal::distort(img, d, snr, seed), out, type);
}

CrEstimate extract_cr(const fs::path &in, const Rect &window, const fs::path &out_json, int patch)
{
    const SlcImage img = read_dataset(in);
    require_stage(img, Stage::raw, "extract-cr");
    const Pixel peak = find_peak(img, window);
    CrEstimate cr = estimate_cr_matrix(img, patch_around(img, peak, patch));
    cr.peak = peak;
    write_json_file(to_json(cr), out_json);
    return cr;
}

void remove_rx(const fs::path &in, const fs::path &cr_json, const fs::path &out, SampleType type)
{
    const SlcImage img = read_dataset(in);
    require_stage(img, Stage::raw, "remove-rx");
    const CrEstimate cr = cr_estimate_from_json(read_json_file(cr_json));
    write_dataset(remove_receiver(img, cr), out, type);
}

CalibrationSolution solve(const fs::path &in, const SolveOptions &opts, const fs::path &out_json)
{
    const SlcImage img = read_dataset(in);
    require_stage(img, Stage::receiver_removed, "solve");

    const PixelMask mask = power_percentile_mask(img, opts.mask_percentile);
    const ReciprocitySolution recip = reciprocity_solve(img, mask);

    std::optional<CrossTalk> xtalk;
    if (opts.target)
    {
        TargetOptions topts;
        topts.allow_faraday = opts.allow_faraday_target;
        xtalk = crosstalk_from_target(img, *opts.target, topts);
    }

    const CalibrationSolution sol = assemble_solution(recip, xtalk, opts.sign);
    json j = to_json(sol);
    j["diagnostics"] = {{"n_pixels", recip.n_pixels},
                        {"residual_rms", recip.residual_rms},
                        {"epsilon", complex_to_json(recip.epsilon)}};
    write_json_file(j, out_json);
    return sol;
}

void apply(const fs::path &in, const fs::path &cal_json, const fs::path &out, SampleType type)
{
    const SlcImage img = read_dataset(in);
    require_stage(img, Stage::receiver_removed, "apply");
    const CalibrationSolution sol = calibration_from_json(read_json_file(cal_json));
    write_dataset(apply_calibration(img, sol), out, type);
}

Metrics report(const fs::path &in, const fs::path &out_dir, int boxcar_window)
{
    return write_report(read_dataset(in), out_dir, boxcar_window);
}

} // namespace polcal::pipeline
