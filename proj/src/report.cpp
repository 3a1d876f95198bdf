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

#include "polcal/report.hpp"
#include "polcal/error.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace polcal
{

double to_db(double ratio)
{
    if (ratio <= 0.0)
        return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(ratio);
}

Metrics compute_metrics(const SlcImage &img)
{
    Metrics m;
    m.stage = img.stage();
    double span_sum = 0.0;
    double peak_span = -1.0;
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
        {
            const std::size_t i = img.index(x, y);
            const ScatteringMatrix s = img.at(i);
            const Vec4 k = to_pauli(s).k;
            const Vec4 l = LexVector::from(s).s;
            for (int c = 0; c < 4; ++c)
            {
                m.pauli_power[c] += std::norm(k(c));
                m.lex_power[c] += std::norm(l(c));
            }
            const double span = img.power(i);
            span_sum += span;
            if (span > peak_span)
            {
                peak_span = span;
                m.peak = {x, y};
            }
        }
    m.reciprocity_ratio = span_sum > 0.0 ? m.pauli_power[3] / span_sum : 0.0;
    const auto n = static_cast<double>(img.size());
    for (int c = 0; c < 4; ++c)
    {
        m.pauli_power[c] /= n;
        m.lex_power[c] /= n;
    }

    const Vec4 kp = to_pauli(img.at(m.peak)).k;
    for (int c = 0; c < 4; ++c)
        m.peak_pauli_power[c] = std::norm(kp(c));
    for (int c = 1; c < 4; ++c)
        m.peak_rel_db[c - 1] =
            m.peak_pauli_power[0] > 0.0 ? to_db(m.peak_pauli_power[c] / m.peak_pauli_power[0]) : 0.0;
    return m;
}

namespace
{

json finite_or_null(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

} // namespace

json to_json(const Metrics &m)
{
    json j;
    j["format_version"] = artifact_format_version;
    j["stage"] = to_string(m.stage);
    j["channel_power"] = {{"k0", m.pauli_power[0]}, {"k1", m.pauli_power[1]}, {"k2", m.pauli_power[2]},
                          {"k3", m.pauli_power[3]}, {"hh", m.lex_power[0]},   {"hv", m.lex_power[1]},
                          {"vh", m.lex_power[2]},   {"vv", m.lex_power[3]}};
    j["reciprocity_residual_ratio"] = m.reciprocity_ratio;
    j["reciprocity_residual_db"] = finite_or_null(to_db(m.reciprocity_ratio));
    j["peak"] = {{"x", m.peak.x},
                 {"y", m.peak.y},
                 {"k_power", m.peak_pauli_power},
                 {"k1_rel_db", finite_or_null(m.peak_rel_db[0])},
                 {"k2_rel_db", finite_or_null(m.peak_rel_db[1])},
                 {"k3_rel_db", finite_or_null(m.peak_rel_db[2])}};
    return j;
}

std::vector<std::uint8_t> quantize_amplitude(const std::vector<double> &amp)
{
    std::vector<std::uint8_t> out(amp.size(), 0);
    if (amp.empty())
        return out;
    double mean = 0.0;
    for (double a : amp)
        mean += a;
    mean /= static_cast<double>(amp.size());
    double var = 0.0;
    for (double a : amp)
        var += (a - mean) * (a - mean);
    var /= static_cast<double>(amp.size());
    const double clip = mean + 2.5 * std::sqrt(var);
    if (!(clip > 0.0))
        return out;
    for (std::size_t i = 0; i < amp.size(); ++i)
    {
        const double v = std::min(amp[i], clip) / clip;
        out[i] = static_cast<std::uint8_t>(std::lround(255.0 * v));
    }
    return out;
}

void write_pgm(const std::filesystem::path &file, int width, int height, const std::vector<std::uint8_t> &pixels)
{
    if (pixels.size() != static_cast<std::size_t>(width) * height)
        throw Error("PGM raster size does not match dimensions");
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot write " + file.string());
    out << "P5\n" << width << " " << height << "\n255\n";
    out.write(reinterpret_cast<const char *>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
}

Metrics write_report(const SlcImage &img, const std::filesystem::path &dir, int boxcar_window)
{
    std::filesystem::create_directories(dir);
    const PauliAmplitudes amp = boxcar(img, boxcar_window);
    for (int c = 0; c < 4; ++c)
        write_pgm(dir / ("k" + std::to_string(c) + ".pgm"), amp.width, amp.height, quantize_amplitude(amp.k[c]));

    const Metrics m = compute_metrics(img);
    json j = to_json(m);
    j["boxcar"] = boxcar_window;
    write_json_file(j, dir / "metrics.json");
    return m;
}

} // namespace polcal
