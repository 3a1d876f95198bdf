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

#include "polcal/json_io.hpp"
#include "polcal/error.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace polcal
{

namespace
{

void check_version(const json &j, std::string_view what)
{
    if (j.contains("format_version") && j["format_version"].get<int>() != artifact_format_version)
        throw Error("unsupported " + std::string(what) + " format_version " + j["format_version"].dump());
}

std::string_view to_string(TargetKind k)
{
    switch (k)
    {
    case TargetKind::trihedral:
        return "trihedral";
    case TargetKind::dihedral:
        return "dihedral";
    case TargetKind::custom_diag:
        return "custom-diag";
    }
    return "unknown";
}

TargetKind target_kind_from_string(const std::string &s)
{
    if (s == "trihedral")
        return TargetKind::trihedral;
    if (s == "dihedral")
        return TargetKind::dihedral;
    if (s == "custom-diag")
        return TargetKind::custom_diag;
    throw Error("unknown point target kind '" + s + "'");
}

json rect_to_json(const Rect &r) { return json::array({r.x, r.y, r.w, r.h}); }

Rect rect_from_json(const json &j)
{
    if (!j.is_array() || j.size() != 4)
        throw Error("region must be [x, y, w, h]");
    return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>()};
}

json pixel_to_json(Pixel p) { return json::array({p.x, p.y}); }

Pixel pixel_from_json(const json &j)
{
    if (!j.is_array() || j.size() != 2)
        throw Error("pixel position must be [x, y]");
    return {j[0].get<int>(), j[1].get<int>()};
}

json target_to_json(const PointTarget &t)
{
    return {{"kind", to_string(t.kind)},
            {"position", pixel_to_json(t.position)},
            {"a", complex_to_json(t.a)},
            {"b", complex_to_json(t.b)}};
}

PointTarget target_from_json(const json &j)
{
    const TargetKind kind = target_kind_from_string(j.at("kind").get<std::string>());
    const Pixel pos = pixel_from_json(j.at("position"));
    PointTarget t;
    if (kind != TargetKind::custom_diag && j.contains("amplitude"))
    {
        const cdouble amp = complex_from_json(j["amplitude"]);
        t = kind == TargetKind::trihedral ? PointTarget::trihedral(pos, amp) : PointTarget::dihedral(pos, amp);
    }
    else
    {
        t = {kind, pos, complex_from_json(j.at("a")), complex_from_json(j.at("b"))};
    }
    t.validate();
    return t;
}

} // namespace

json complex_to_json(cdouble z)
{
    return json::array({z.real(), z.imag()});
}

cdouble complex_from_json(const json &j)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error("complex value must be [re, im], got " + j.dump());
    return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const CrEstimate &cr)
{
    return {{"format_version", artifact_format_version},
            {"s_cr", matrix_to_json<2>(cr.s_cr)},
            {"s_cr_inv", matrix_to_json<2>(cr.s_cr_inv)},
            {"peak", pixel_to_json(cr.peak)},
            {"dominance", cr.dominance}};
}

CrEstimate cr_estimate_from_json(const json &j)
{
    try
    {
        check_version(j, "cr.json");
        CrEstimate cr;
        cr.s_cr = matrix_from_json<2>(j.at("s_cr"));
        cr.s_cr_inv = j.contains("s_cr_inv") ? matrix_from_json<2>(j["s_cr_inv"]) : inverse_checked(cr.s_cr);
        cr.peak = pixel_from_json(j.at("peak"));
        cr.dominance = j.at("dominance").get<double>();
        return cr;
    }
    catch (const json::exception &e)
    {
        throw Error("malformed reflector estimate: " + std::string(e.what()));
    }
}

json to_json(const CalibrationSolution &sol)
{
    return {{"format_version", artifact_format_version},
            {"c", complex_to_json(sol.c)},
            {"C1", complex_to_json(sol.C1)},
            {"C2", complex_to_json(sol.C2)},
            {"x1", complex_to_json(sol.x1)},
            {"x2", complex_to_json(sol.x2)},
            {"x3", complex_to_json(sol.x3)},
            {"a42n", complex_to_json(sol.a42n)},
            {"a43n", complex_to_json(sol.a43n)},
            {"A_inv", matrix_to_json<4>(sol.A_inv)},
            {"sign_choice", sol.sign_choice == SignChoice::plus ? "+" : "-"},
            {"mode", sol.mode == CalibrationMode::full ? "full" : "reciprocity-only"}};
}

CalibrationSolution calibration_from_json(const json &j)
{
    try
    {
        check_version(j, "cal.json");
        CalibrationSolution sol;
        sol.c = complex_from_json(j.at("c"));
        sol.C1 = complex_from_json(j.at("C1"));
        sol.C2 = complex_from_json(j.at("C2"));
        sol.x1 = complex_from_json(j.at("x1"));
        sol.x2 = complex_from_json(j.at("x2"));
        sol.x3 = complex_from_json(j.at("x3"));
        sol.a42n = complex_from_json(j.at("a42n"));
        sol.a43n = complex_from_json(j.at("a43n"));
        sol.A_inv = matrix_from_json<4>(j.at("A_inv"));
        const std::string sign = j.at("sign_choice").get<std::string>();
        if (sign != "+" && sign != "-")
            throw Error("sign_choice must be \"+\" or \"-\"");
        sol.sign_choice = sign == "+" ? SignChoice::plus : SignChoice::minus;
        const std::string mode = j.at("mode").get<std::string>();
        if (mode != "full" && mode != "reciprocity-only")
            throw Error("unknown calibration mode '" + mode + "'");
        sol.mode = mode == "full" ? CalibrationMode::full : CalibrationMode::reciprocity_only;
        return sol;
    }
    catch (const json::exception &e)
    {
        throw Error("malformed calibration solution: " + std::string(e.what()));
    }
}

json to_json(const FaradayConfig &f)
{
    return {{"faraday_deg", f.theta_deg}, {"t11d", complex_to_json(f.t11d)}, {"t22d", complex_to_json(f.t22d)}};
}

FaradayConfig faraday_from_json(const json &j)
{
    FaradayConfig f;
    f.theta_deg = j.at("faraday_deg").get<double>();
    f.t11d = j.contains("t11d") ? complex_from_json(j["t11d"]) : cdouble{1.0};
    f.t22d = j.contains("t22d") ? complex_from_json(j["t22d"]) : cdouble{1.0};
    f.validate();
    return f;
}

json to_json(const SceneDistortion &d)
{
    json j;
    j["R"] = matrix_to_json<2>(d.R);
    // With a Faraday model, T is the resolved transmitter and is ignored on read.
    j["T"] = matrix_to_json<2>(d.resolve().T);
    if (d.faraday)
        j.update(to_json(*d.faraday));
    return j;
}

SceneDistortion distortion_from_json(const json &doc)
{
    try
    {
        const json &j = doc.contains("distortion") ? doc["distortion"] : doc;
        if (j.is_null())
            throw Error("document has no distortion");
        SceneDistortion d;
        if (j.contains("R"))
            d.R = matrix_from_json<2>(j["R"]);
        if (j.contains("faraday_deg"))
            d.faraday = faraday_from_json(j);
        else if (j.contains("T"))
            d.T = matrix_from_json<2>(j["T"]);
        d.resolve();
        return d;
    }
    catch (const json::exception &e)
    {
        throw Error("malformed distortion: " + std::string(e.what()));
    }
}

json to_json(const SceneConfig &cfg)
{
    json j;
    j["format_version"] = artifact_format_version;
    j["width"] = cfg.width;
    j["height"] = cfg.height;
    j["seed"] = cfg.seed;
    j["snr_db"] = std::isfinite(cfg.snr_db) ? json(cfg.snr_db) : json(nullptr);
    j["classes"] = json::array();
    for (const auto &c : cfg.classes)
        j["classes"].push_back(
            {{"name", c.name}, {"region", rect_to_json(c.region)}, {"pauli_cov", matrix_to_json<3>(c.pauli_cov)}});
    j["targets"] = json::array();
    for (const auto &t : cfg.targets)
        j["targets"].push_back(target_to_json(t));
    j["distortion"] = cfg.distortion ? to_json(*cfg.distortion) : json(nullptr);
    return j;
}

SceneConfig scene_from_json(const json &j)
{
    try
    {
        check_version(j, "scene");
        SceneConfig cfg;
        cfg.width = j.at("width").get<int>();
        cfg.height = j.at("height").get<int>();
        cfg.seed = j.value("seed", std::uint64_t{1});
        if (j.contains("snr_db") && !j["snr_db"].is_null())
        {
            const json &s = j["snr_db"];
            cfg.snr_db = s.is_string() && s.get<std::string>() == "inf" ? std::numeric_limits<double>::infinity()
                                                                         : s.get<double>();
        }
        for (const auto &c : j.value("classes", json::array()))
            cfg.classes.push_back(
                {c.at("name").get<std::string>(), rect_from_json(c.at("region")), matrix_from_json<3>(c.at("pauli_cov"))});
        for (const auto &t : j.value("targets", json::array()))
            cfg.targets.push_back(target_from_json(t));
        if (j.contains("distortion") && !j["distortion"].is_null())
            cfg.distortion = distortion_from_json(j["distortion"]);
        cfg.validate();
        return cfg;
    }
    catch (const json::exception &e)
    {
        throw Error("malformed scene config: " + std::string(e.what()));
    }
}

json truth_json(const SceneConfig &cfg)
{
    json j;
    j["format_version"] = artifact_format_version;
    j["width"] = cfg.width;
    j["height"] = cfg.height;
    j["seed"] = cfg.seed;
    j["snr_db"] = std::isfinite(cfg.snr_db) ? json(cfg.snr_db) : json(nullptr);
    if (cfg.distortion)
    {
        json d = to_json(*cfg.distortion);
        d["theta_f_deg"] = cfg.distortion->faraday_deg();
        j["distortion"] = d;
    }
    else
    {
        j["distortion"] = nullptr;
    }
    j["targets"] = json::array();
    for (const auto &t : cfg.targets)
        j["targets"].push_back(target_to_json(t));
    j["classes"] = json::array();
    for (const auto &c : cfg.classes)
        j["classes"].push_back({{"name", c.name}, {"region", rect_to_json(c.region)}});
    return j;
}

json read_json_file(const std::filesystem::path &file)
{
    std::ifstream in(file);
    if (!in)
        throw Error("cannot open " + file.string());
    try
    {
        return json::parse(in);
    }
    catch (const json::exception &e)
    {
        throw Error(file.string() + " does not parse: " + e.what());
    }
}

void write_json_file(const json &j, const std::filesystem::path &file)
{
    if (file.has_parent_path())
        std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::trunc);
    if (!out)
        throw Error("cannot write " + file.string());
    out << j.dump(2) << "\n";
}

} // namespace polcal
