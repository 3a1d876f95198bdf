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

#include "polcal/dataset.hpp"
#include "polcal/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>

namespace polcal
{

namespace fs = std::filesystem;
using nlohmann::json;

namespace
{

template <typename T>
void to_little_endian(T &v)
{
    if constexpr (std::endian::native == std::endian::big)
    {
        auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(v);
        std::reverse(bytes.begin(), bytes.end());
        v = std::bit_cast<T>(bytes);
    }
}

template <typename Real>
void write_plane(const std::vector<cdouble> &plane, const fs::path &file)
{
    std::vector<Real> buf(2 * plane.size());
    for (std::size_t i = 0; i < plane.size(); ++i)
    {
        buf[2 * i] = static_cast<Real>(plane[i].real());
        buf[2 * i + 1] = static_cast<Real>(plane[i].imag());
        to_little_endian(buf[2 * i]);
        to_little_endian(buf[2 * i + 1]);
    }
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot open " + file.string() + " for writing");
    out.write(reinterpret_cast<const char *>(buf.data()), static_cast<std::streamsize>(buf.size() * sizeof(Real)));
    if (!out)
        throw Error("write failed for " + file.string());
}

template <typename Real>
void read_plane(std::vector<cdouble> &plane, const fs::path &file)
{
    std::vector<Real> buf(2 * plane.size());
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw Error("cannot open " + file.string());
    in.read(reinterpret_cast<char *>(buf.data()), static_cast<std::streamsize>(buf.size() * sizeof(Real)));
    if (!in)
        throw Error("read failed for " + file.string());
    for (std::size_t i = 0; i < plane.size(); ++i)
    {
        to_little_endian(buf[2 * i]);
        to_little_endian(buf[2 * i + 1]);
        plane[i] = {static_cast<double>(buf[2 * i]), static_cast<double>(buf[2 * i + 1])};
    }
}

} // namespace

std::string_view to_string(SampleType t)
{
    return t == SampleType::c64 ? "c64" : "c128";
}

SampleType sample_type_from_string(std::string_view s)
{
    if (s == "c64")
        return SampleType::c64;
    if (s == "c128")
        return SampleType::c128;
    throw Error("unknown dtype '" + std::string(s) + "'");
}

std::size_t sample_bytes(SampleType t)
{
    return t == SampleType::c64 ? 8 : 16;
}

void write_dataset(const SlcImage &img, const fs::path &dir, SampleType type)
{
    fs::create_directories(dir);

    json meta;
    meta["format_version"] = dataset_format_version;
    meta["width"] = img.width();
    meta["height"] = img.height();
    meta["dtype"] = to_string(type);
    meta["byte_order"] = "little-endian";
    meta["flags"] = to_string(img.stage());
    meta["provenance"]["notes"] = img.provenance().notes;
    if (img.provenance().faraday_deg)
        meta["provenance"]["faraday_deg"] = *img.provenance().faraday_deg;

    for (int c = 0; c < 4; ++c)
    {
        const fs::path file = dir / (std::string(channel_names[c]) + ".bin");
        if (type == SampleType::c64)
            write_plane<float>(img.plane(static_cast<Channel>(c)), file);
        else
            write_plane<double>(img.plane(static_cast<Channel>(c)), file);
    }

    std::ofstream out(dir / "meta.json", std::ios::trunc);
    if (!out)
        throw Error("cannot write " + (dir / "meta.json").string());
    out << meta.dump(2) << "\n";
}

SlcImage read_dataset(const fs::path &dir)
{
    const fs::path meta_file = dir / "meta.json";
    if (!fs::exists(meta_file))
        throw Error("missing meta.json in " + dir.string());

    json meta;
    try
    {
        std::ifstream in(meta_file);
        meta = json::parse(in);
    }
    catch (const json::exception &e)
    {
        throw Error("meta.json does not parse: " + std::string(e.what()));
    }

    try
    {
        if (meta.value("format_version", 0) != dataset_format_version)
            throw Error("unsupported dataset format_version");
        if (meta.value("byte_order", std::string("little-endian")) != "little-endian")
            throw Error("unsupported byte order '" + meta["byte_order"].get<std::string>() + "'");

        const SampleType type = sample_type_from_string(meta.at("dtype").get<std::string>());
        SlcImage img(meta.at("width").get<int>(), meta.at("height").get<int>(),
                     stage_from_string(meta.at("flags").get<std::string>()));

        if (meta.contains("provenance"))
        {
            const json &p = meta["provenance"];
            img.provenance().notes = p.value("notes", std::vector<std::string>{});
            if (p.contains("faraday_deg"))
                img.provenance().faraday_deg = p["faraday_deg"].get<double>();
        }

        const auto expected = static_cast<std::uintmax_t>(img.size() * sample_bytes(type));
        for (int c = 0; c < 4; ++c)
        {
            const std::string name = std::string(channel_names[c]) + ".bin";
            const fs::path file = dir / name;
            if (!fs::exists(file))
                throw Error("missing plane " + name);
            if (const auto found = fs::file_size(file); found != expected)
                throw Error("plane " + name + " size mismatch: expected " + std::to_string(expected) +
                            " bytes, found " + std::to_string(found));
            if (type == SampleType::c64)
                read_plane<float>(img.plane(static_cast<Channel>(c)), file);
            else
                read_plane<double>(img.plane(static_cast<Channel>(c)), file);
        }
        return img;
    }
    catch (const json::exception &e)
    {
        throw Error("meta.json is malformed: " + std::string(e.what()));
    }
}

} // namespace polcal
