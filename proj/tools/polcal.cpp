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

// polcal command line: simulate -> distort -> extract-cr -> remove-rx -> solve -> apply -> report

#include "polcal/error.hpp"
#include "polcal/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <vector>

namespace
{

using namespace polcal;

std::vector<int> parse_ints(const std::string &text, std::size_t count, const std::string &flag)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        try
        {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        }
        catch (const std::exception &)
        {
            throw Error(flag + " expects " + std::to_string(count) + " comma-separated integers, got '" + text + "'");
        }
    }
    if (out.size() != count)
        throw Error(flag + " expects " + std::to_string(count) + " comma-separated integers, got '" + text + "'");
    return out;
}

SampleType dtype_of(const std::string &s) { return sample_type_from_string(s); }

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Pauli-basis polarimetric calibration of quad-pol SLC data"};
    app.require_subcommand(1);

    std::string dtype = "c128";
    app.add_option("--dtype", dtype, "Sample type of written datasets")->check(CLI::IsMember({"c64", "c128"}));

    // simulate
    auto *sim = app.add_subcommand("simulate", "Generate a truth dataset from a scene config");
    std::string sim_config, sim_out;
    std::optional<std::uint64_t> sim_seed;
    sim->add_option("--config", sim_config, "Scene JSON")->required();
    sim->add_option("--out", sim_out, "Output dataset directory")->required();
    sim->add_option("--seed", sim_seed, "Override the scene seed");

    // distort
    auto *dis = app.add_subcommand("distort", "Apply S_obs = R S T + N");
    std::string dis_in, dis_d, dis_out;
    std::optional<double> dis_snr;
    std::uint64_t dis_seed = 1;
    dis->add_option("--in", dis_in)->required();
    dis->add_option("--distortion", dis_d, "Distortion JSON (or truth.json)")->required();
    dis->add_option("--snr-db", dis_snr, "Clutter-to-noise ratio; omit for the document's value or noise-free");
    dis->add_option("--seed", dis_seed, "Noise seed");
    dis->add_option("--out", dis_out)->required();

    // extract-cr
    auto *ext = app.add_subcommand("extract-cr", "Estimate the trihedral product matrix");
    std::string ext_in, ext_window, ext_out;
    int ext_patch = default_cr_patch;
    ext->add_option("--in", ext_in)->required();
    ext->add_option("--window", ext_window, "Peak search window X,Y,W,H")->required();
    ext->add_option("--patch", ext_patch, "Covariance patch size around the peak")->check(CLI::PositiveNumber);
    ext->add_option("--out", ext_out, "cr.json")->required();

    // remove-rx
    auto *rrx = app.add_subcommand("remove-rx", "Left-multiply every pixel by the inverse reflector matrix");
    std::string rrx_in, rrx_cr, rrx_out;
    rrx->add_option("--in", rrx_in)->required();
    rrx->add_option("--cr", rrx_cr)->required();
    rrx->add_option("--out", rrx_out)->required();

    // solve
    auto *sol = app.add_subcommand("solve", "Reciprocity least squares and optional point-target cross-talk");
    std::string sol_in, sol_out, sol_target, sol_sign = "+";
    double sol_pct = 50.0;
    bool sol_force = false;
    sol->add_option("--in", sol_in)->required();
    sol->add_option("--mask-percentile", sol_pct, "Use pixels whose span exceeds this percentile")
        ->check(CLI::Range(0.0, 99.999));
    sol->add_option("--target", sol_target, "Symmetric point target X,Y");
    sol->add_option("--sign", sol_sign, "Branch of the copolar ratio")->check(CLI::IsMember({"+", "-"}));
    sol->add_flag("--allow-faraday-target", sol_force, "Run the target estimator despite Faraday rotation");
    sol->add_option("--out", sol_out, "cal.json")->required();

    // apply
    auto *apl = app.add_subcommand("apply", "Apply a calibration solution");
    std::string apl_in, apl_cal, apl_out;
    apl->add_option("--in", apl_in)->required();
    apl->add_option("--cal", apl_cal)->required();
    apl->add_option("--out", apl_out)->required();

    // report
    auto *rep = app.add_subcommand("report", "Pauli amplitude images and metrics.json");
    std::string rep_in, rep_out;
    int rep_box = 3;
    rep->add_option("--in", rep_in)->required();
    rep->add_option("--out", rep_out)->required();
    rep->add_option("--boxcar", rep_box, "Odd boxcar window")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try
    {
        const SampleType type = dtype_of(dtype);
        if (*sim)
        {
            pipeline::simulate(sim_config, sim_out, sim_seed, type);
        }
        else if (*dis)
        {
            pipeline::distort(dis_in, dis_d, dis_snr, dis_out, dis_seed, type);
        }
        else if (*ext)
        {
            const auto w = parse_ints(ext_window, 4, "--window");
            const CrEstimate cr = pipeline::extract_cr(ext_in, {w[0], w[1], w[2], w[3]}, ext_out, ext_patch);
            std::cout << "reflector peak (" << cr.peak.x << ", " << cr.peak.y << "), dominance " << cr.dominance
                      << "\n";
        }
        else if (*rrx)
        {
            pipeline::remove_rx(rrx_in, rrx_cr, rrx_out, type);
        }
        else if (*sol)
        {
            pipeline::SolveOptions opts;
            opts.mask_percentile = sol_pct;
            opts.sign = sol_sign == "+" ? SignChoice::plus : SignChoice::minus;
            opts.allow_faraday_target = sol_force;
            if (!sol_target.empty())
            {
                const auto t = parse_ints(sol_target, 2, "--target");
                opts.target = Pixel{t[0], t[1]};
            }
            const CalibrationSolution s = pipeline::solve(sol_in, opts, sol_out);
            std::cout << "c = " << s.c << ", a42n = " << s.a42n << ", a43n = " << s.a43n << "\n";
        }
        else if (*apl)
        {
            pipeline::apply(apl_in, apl_cal, apl_out, type);
        }
        else if (*rep)
        {
            const Metrics m = pipeline::report(rep_in, rep_out, rep_box);
            std::cout << "reciprocity residual " << to_db(m.reciprocity_ratio) << " dB\n";
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "polcal: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
