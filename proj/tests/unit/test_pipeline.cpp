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

#include "oracles.hpp"
#include "test_helpers.hpp"
#include "worked_example.hpp"

#include "polcal/json_io.hpp"
#include "polcal/pipeline.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>

using namespace polcal;
using namespace polcal::testing;
namespace fs = std::filesystem;

namespace
{

class PipelineTest : public ::testing::Test
{
protected:
    void SetUp() override
    {
        root = fs::path(POLCAL_TEST_TMP) / "pipeline" /
               ::testing::UnitTest::GetInstance()->current_test_info()->name();
        fs::remove_all(root);
        fs::create_directories(root);

        SceneConfig cfg;
        cfg.width = 64;
        cfg.height = 48;
        Mat3 cov = Mat3::Zero();
        cov.diagonal() << 1.0, 0.4, 0.45;
        cfg.classes.push_back({"forest", {0, 0, 64, 48}, cov});
        cfg.classes.push_back({"clearing", {6, 6, 9, 9}, Mat3::Zero()});
        cfg.targets.push_back(PointTarget::trihedral({10, 10}, 20.0));
        cfg.targets.push_back(PointTarget::dihedral({50, 30}, 20.0));
        cfg.seed = 5;
        write_json_file(to_json(cfg), root / "scene.json");

        SceneDistortion d;
        d.R = worked::R();
        d.faraday = worked::fitted_faraday();
        write_json_file(json{{"distortion", to_json(d)}}, root / "distortion.json");
    }

    static std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    void run_to_receiver_removed()
    {
        pipeline::simulate(root / "scene.json", root / "truth");
        pipeline::distort(root / "truth", root / "distortion.json", std::nullopt, root / "obs");
        pipeline::extract_cr(root / "obs", {0, 0, 30, 30}, root / "cr.json");
        pipeline::remove_rx(root / "obs", root / "cr.json", root / "rx");
    }

    fs::path root;
};

} // namespace

TEST_F(PipelineTest, StagesChainAndRecordFlags)
{
    run_to_receiver_removed();
    EXPECT_TRUE(fs::exists(root / "truth" / "truth.json"));
    EXPECT_EQ(read_dataset(root / "obs").stage(), Stage::raw);
    EXPECT_EQ(read_dataset(root / "obs").provenance().faraday_deg, 3.0);

    const CrEstimate cr = cr_estimate_from_json(read_json_file(root / "cr.json"));
    EXPECT_EQ(cr.peak, (Pixel{10, 10}));
    EXPECT_LE(max_abs_diff(cr.s_cr, worked::reference_s_cr()), 0.01);

    EXPECT_EQ(read_dataset(root / "rx").stage(), Stage::receiver_removed);
    pipeline::solve(root / "rx", {}, root / "cal.json");
    const json cal = read_json_file(root / "cal.json");
    EXPECT_TRUE(cal.contains("diagnostics"));
    pipeline::apply(root / "rx", root / "cal.json", root / "cal");
    EXPECT_EQ(read_dataset(root / "cal").stage(), Stage::calibrated);

    const Metrics before = pipeline::report(root / "obs", root / "report_obs");
    const Metrics after = pipeline::report(root / "cal", root / "report_cal");
    for (const char *f : {"k0.pgm", "k1.pgm", "k2.pgm", "k3.pgm", "metrics.json"})
        EXPECT_TRUE(fs::exists(root / "report_cal" / f)) << f;
    EXPECT_LE(to_db(after.reciprocity_ratio) - to_db(before.reciprocity_ratio), -30.0);
}

TEST_F(PipelineTest, StageMismatchesAreReported)
{
    run_to_receiver_removed();
    EXPECT_TRUE(throws_error([&] { pipeline::solve(root / "obs", {}, root / "x.json"); }, "run remove-rx first"));
    EXPECT_TRUE(throws_error([&] { pipeline::apply(root / "obs", root / "cr.json", root / "x"); },
                             "run remove-rx first"));
    EXPECT_TRUE(throws_error([&] { pipeline::remove_rx(root / "rx", root / "cr.json", root / "x"); },
                             "already receiver-removed"));
    EXPECT_TRUE(throws_error([&] { pipeline::extract_cr(root / "rx", {0, 0, 30, 30}, root / "x.json"); },
                             "already receiver-removed"));
}

TEST_F(PipelineTest, FaradayDataRefusesTargetByDefault)
{
    run_to_receiver_removed();
    pipeline::SolveOptions opts;
    opts.target = Pixel{50, 30};
    EXPECT_TRUE(throws_error([&] { pipeline::solve(root / "rx", opts, root / "x.json"); }, "Faraday"));
    opts.allow_faraday_target = true;
    EXPECT_NO_THROW(pipeline::solve(root / "rx", opts, root / "x.json"));
}

TEST_F(PipelineTest, IdentityCalibrationOnlyChangesFlag)
{
    run_to_receiver_removed();
    write_json_file(to_json(CalibrationSolution{}), root / "identity.json");
    pipeline::apply(root / "rx", root / "identity.json", root / "same");
    const SlcImage a = read_dataset(root / "rx");
    const SlcImage b = read_dataset(root / "same");
    EXPECT_EQ(b.stage(), Stage::calibrated);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, (a.at(i).matrix() - b.at(i).matrix()).norm() / (1e-300 + a.at(i).matrix().norm()));
    EXPECT_LE(worst, 1e-14);
}

TEST_F(PipelineTest, RerunsAreByteIdentical)
{
    run_to_receiver_removed();
    pipeline::distort(root / "truth", root / "distortion.json", 30.0, root / "n1", 9);
    pipeline::distort(root / "truth", root / "distortion.json", 30.0, root / "n2", 9);
    pipeline::extract_cr(root / "obs", {0, 0, 30, 30}, root / "cr2.json");
    for (const char *f : {"hh.bin", "hv.bin", "vh.bin", "vv.bin", "meta.json"})
        EXPECT_EQ(slurp(root / "n1" / f), slurp(root / "n2" / f)) << f;
    EXPECT_EQ(slurp(root / "cr.json"), slurp(root / "cr2.json"));
}
