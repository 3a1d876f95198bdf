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

#include "polcal/dataset.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace polcal;
using namespace polcal::testing;
namespace fs = std::filesystem;

namespace
{

fs::path fresh_dir(const std::string &name)
{
    const fs::path dir = fs::path(POLCAL_TEST_TMP) / "dataset" / name;
    fs::remove_all(dir);
    return dir;
}

SlcImage random_image(int w, int h, std::uint64_t seed)
{
    Rng rng(seed);
    SlcImage img(w, h, Stage::receiver_removed);
    for (std::size_t i = 0; i < img.size(); ++i)
        img.set(i, rng.scattering());
    img.provenance().notes = {"first", "second"};
    img.provenance().faraday_deg = 2.5;
    return img;
}

} // namespace

TEST(Dataset, BitIdenticalRoundTrip)
{
    const SlcImage img = random_image(13, 7, 51);
    const fs::path dir = fresh_dir("roundtrip");
    write_dataset(img, dir);
    const SlcImage back = read_dataset(dir);
    EXPECT_EQ(back.width(), 13);
    EXPECT_EQ(back.height(), 7);
    EXPECT_EQ(back.stage(), Stage::receiver_removed);
    EXPECT_EQ(back.provenance().notes, img.provenance().notes);
    EXPECT_EQ(back.provenance().faraday_deg, img.provenance().faraday_deg);
    for (int c = 0; c < 4; ++c)
        EXPECT_EQ(back.plane(static_cast<Channel>(c)), img.plane(static_cast<Channel>(c)));
}

TEST(Dataset, PlaneFilesAreRawLittleEndian)
{
    SlcImage img(2, 1);
    img.set(1, 0, {cdouble(1.5, -2.0), 0.0, 0.0, 0.0});
    const fs::path dir = fresh_dir("layout");
    write_dataset(img, dir);
    EXPECT_EQ(fs::file_size(dir / "hh.bin"), 32u);
    std::ifstream in(dir / "hh.bin", std::ios::binary);
    double v[4];
    in.read(reinterpret_cast<char *>(v), sizeof v);
    EXPECT_EQ(v[0], 0.0);
    EXPECT_EQ(v[2], 1.5);
    EXPECT_EQ(v[3], -2.0);
}

TEST(Dataset, SinglePrecisionBound)
{
    const SlcImage img = random_image(20, 20, 52);
    const fs::path dir = fresh_dir("c64");
    write_dataset(img, dir, SampleType::c64);
    EXPECT_EQ(fs::file_size(dir / "vv.bin"), 400u * 8u);
    const SlcImage back = read_dataset(dir);

    double range = 0.0, worst = 0.0;
    for (int c = 0; c < 4; ++c)
        for (std::size_t i = 0; i < img.size(); ++i)
        {
            const cdouble a = img.plane(static_cast<Channel>(c))[i];
            const cdouble b = back.plane(static_cast<Channel>(c))[i];
            range = std::max({range, std::abs(a.real()), std::abs(a.imag())});
            worst = std::max({worst, std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag())});
        }
    EXPECT_GT(worst, 0.0);
    EXPECT_LE(worst, range * std::ldexp(1.0, -23));
}

TEST(Dataset, TruncatedPlane)
{
    const fs::path dir = fresh_dir("truncated");
    write_dataset(random_image(4, 4, 53), dir);
    fs::resize_file(dir / "hv.bin", 100);
    EXPECT_TRUE(throws_error([&] { read_dataset(dir); }, "plane hv.bin size mismatch: expected 256 bytes, found 100"));
}

TEST(Dataset, MissingPlane)
{
    const fs::path dir = fresh_dir("missing");
    write_dataset(random_image(4, 4, 54), dir);
    fs::remove(dir / "vh.bin");
    EXPECT_TRUE(throws_error([&] { read_dataset(dir); }, "missing plane vh.bin"));
}

TEST(Dataset, UnknownDtypeAndMissingMeta)
{
    const fs::path dir = fresh_dir("dtype");
    write_dataset(random_image(4, 4, 55), dir);
    std::ofstream(dir / "meta.json")
        << R"({"format_version":1,"width":4,"height":4,"dtype":"i16","byte_order":"little-endian","flags":"raw"})";
    EXPECT_TRUE(throws_error([&] { read_dataset(dir); }, "unknown dtype 'i16'"));

    EXPECT_TRUE(throws_error([&] { read_dataset(fresh_dir("nothing")); }, "missing meta.json"));
}

TEST(Dataset, StageNames)
{
    for (Stage s : {Stage::raw, Stage::receiver_removed, Stage::calibrated})
        EXPECT_EQ(stage_from_string(to_string(s)), s);
    EXPECT_EQ(to_string(Stage::receiver_removed), "receiver-removed");
    EXPECT_THROW(stage_from_string("cooked"), Error);
}
