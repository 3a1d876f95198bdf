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

#include "polcal/scene_sim.hpp"
#include "polcal/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace polcal
{

namespace
{

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t clutter_stream = 1;
constexpr std::uint64_t noise_stream = 2;

/// Standard circular complex Gaussian, E|w|^2 = 1.
class CircularGaussian
{
public:
    explicit CircularGaussian(std::uint64_t seed) : rng_(seed), normal_(0.0, std::sqrt(0.5)) {}
    cdouble operator()() { return {normal_(rng_), normal_(rng_)}; }

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_;
};

std::string where(Pixel p)
{
    std::ostringstream s;
    s << "(" << p.x << ", " << p.y << ")";
    return s.str();
}

} // namespace

void PointTarget::validate() const
{
    switch (kind)
    {
    case TargetKind::trihedral:
        if (a != b)
            throw Error("trihedral target needs a == b");
        break;
    case TargetKind::dihedral:
        if (a != -b)
            throw Error("dihedral target needs a == -b");
        break;
    case TargetKind::custom_diag:
        break;
    }
}

DistortionPair SceneDistortion::resolve() const
{
    if (T && faraday)
        throw Error("distortion gives both an explicit T and a Faraday model");
    DistortionPair d;
    d.R = R;
    if (faraday)
        d.T = faraday_T(*faraday);
    else if (T)
        d.T = *T;
    d.validate();
    return d;
}

void SceneConfig::validate() const
{
    if (width <= 0 || height <= 0)
        throw Error("scene dimensions must be positive");
    const Rect bounds{0, 0, width, height};
    for (const auto &c : classes)
    {
        const Rect &r = c.region;
        if (r.w <= 0 || r.h <= 0 || r.x < 0 || r.y < 0 || r.x + r.w > bounds.w || r.y + r.h > bounds.h)
            throw Error("clutter class '" + c.name + "' region outside scene bounds");
    }
    for (const auto &t : targets)
    {
        if (!bounds.contains(t.position))
            throw Error("point target at " + where(t.position) + " outside scene bounds");
        t.validate();
    }
    if (distortion)
        distortion->resolve();
}

SceneConfig default_scene(std::uint64_t seed)
{
    SceneConfig cfg;
    cfg.width = 256;
    cfg.height = 256;
    cfg.seed = seed;

    // Rough surface: strong surface term, weak cross-pol, HH+VV / HH-VV correlation 0.5.
    Mat3 surface = Mat3::Zero();
    surface(0, 0) = 1.0;
    surface(1, 1) = 0.25;
    surface(2, 2) = 0.05;
    surface(0, 1) = surface(1, 0) = 0.5 * std::sqrt(1.0 * 0.25);
    // Forest canopy: volume-like, comparable cross-pol.
    Mat3 forest = Mat3::Zero();
    forest(0, 0) = 1.0;
    forest(1, 1) = 0.4;
    forest(2, 2) = 0.45;

    cfg.classes.push_back({"surface", {0, 0, 256, 256}, surface});
    cfg.classes.push_back({"forest", {96, 80, 96, 112}, forest});
    cfg.classes.push_back({"clearing", {36, 36, 17, 17}, Mat3::Zero()});

    cfg.targets.push_back(PointTarget::trihedral({44, 44}, 20.0));
    cfg.targets.push_back(PointTarget::dihedral({210, 200}, 10.0));
    return cfg;
}

Mat3 covariance_factor(const Mat3 &cov)
{
    if ((cov - cov.adjoint()).norm() > 1e-12 * cov.norm())
        throw Error("pauli covariance is not Hermitian");
    const double trace = cov.trace().real();
    if (trace == 0.0 && cov.norm() == 0.0)
        return Mat3::Zero();
    Eigen::SelfAdjointEigenSolver<Mat3> eig(0.5 * (cov + cov.adjoint()));
    Eigen::Vector3d lambda = eig.eigenvalues();
    for (int i = 0; i < 3; ++i)
    {
        if (lambda(i) < -1e-12 * std::abs(trace))
            throw Error("pauli covariance is not positive semidefinite");
        lambda(i) = std::max(lambda(i), 0.0);
    }
    return eig.eigenvectors() * lambda.cwiseSqrt().cast<cdouble>().asDiagonal();
}

std::uint64_t row_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t row)
{
    return splitmix64(splitmix64(seed) + (stream << 32) + row);
}

SlcImage generate_truth(const SceneConfig &cfg)
{
    cfg.validate();

    std::vector<Mat3> factors;
    factors.reserve(cfg.classes.size());
    for (const auto &c : cfg.classes)
    {
        try
        {
            factors.push_back(covariance_factor(c.pauli_cov));
        }
        catch (const Error &e)
        {
            throw Error("clutter class '" + c.name + "': " + e.what());
        }
    }

    SlcImage img(cfg.width, cfg.height);
    for (int y = 0; y < cfg.height; ++y)
    {
        CircularGaussian draw(row_seed(cfg.seed, clutter_stream, static_cast<std::uint64_t>(y)));
        for (int x = 0; x < cfg.width; ++x)
        {
            int owner = -1;
            for (int c = static_cast<int>(cfg.classes.size()) - 1; c >= 0; --c)
                if (cfg.classes[c].region.contains({x, y}))
                {
                    owner = c;
                    break;
                }
            if (owner < 0)
                continue;
            const Eigen::Vector3cd w(draw(), draw(), draw());
            const Eigen::Vector3cd k3 = factors[owner] * w;
            img.set(x, y, from_pauli({Vec4(k3(0), k3(1), k3(2), 0.0)}));
        }
    }

    for (const auto &t : cfg.targets)
    {
        double clutter_span = 0.0;
        for (int c = static_cast<int>(cfg.classes.size()) - 1; c >= 0; --c)
            if (cfg.classes[c].region.contains(t.position))
            {
                clutter_span = cfg.classes[c].pauli_cov.trace().real();
                break;
            }
        const double span = std::norm(t.a) + std::norm(t.b);
        if (span < 100.0 * clutter_span)
            throw Error("point target at " + where(t.position) + " does not dominate local clutter by 20 dB");
        img.set(t.position.x, t.position.y, ScatteringMatrix::diagonal(t.a, t.b));
    }

    img.provenance().notes.push_back("simulated truth, seed " + std::to_string(cfg.seed));
    return img;
}

double mean_clutter_channel_power(const SlcImage &img)
{
    std::vector<double> spans;
    spans.reserve(img.size());
    for (std::size_t i = 0; i < img.size(); ++i)
        if (const double p = img.power(i); p > 0.0)
            spans.push_back(p);
    if (spans.empty())
        return 0.0;

    std::vector<double> sorted = spans;
    const std::size_t mid = sorted.size() / 2;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(mid), sorted.end());
    const double cut = 100.0 * sorted[mid];

    double sum = 0.0;
    std::size_t n = 0;
    for (double p : spans)
        if (p <= cut)
        {
            sum += p;
            ++n;
        }
    return sum / static_cast<double>(n) / 4.0;
}

SlcImage distort(const SlcImage &img, const SceneDistortion &d, double snr_db, std::uint64_t seed)
{
    const DistortionPair pair = d.resolve();
    SlcImage out = distort(img, pair, snr_db, seed);
    if (d.faraday)
        out.provenance().faraday_deg = d.faraday->theta_deg;
    return out;
}

SlcImage distort(const SlcImage &img, const DistortionPair &d, double snr_db, std::uint64_t seed)
{
    d.validate();
    if (std::isnan(snr_db))
        throw Error("snr_db is NaN");

    SlcImage out = img;
    for (std::size_t i = 0; i < img.size(); ++i)
        out.set(i, ScatteringMatrix::from_matrix(d.R * img.at(i).matrix() * d.T));

    std::ostringstream note;
    if (std::isfinite(snr_db))
    {
        const double sigma2 = mean_clutter_channel_power(out) / std::pow(10.0, snr_db / 10.0);
        const double sigma = std::sqrt(sigma2);
        for (int y = 0; y < out.height(); ++y)
        {
            CircularGaussian draw(row_seed(seed, noise_stream, static_cast<std::uint64_t>(y)));
            for (int x = 0; x < out.width(); ++x)
            {
                const std::size_t i = out.index(x, y);
                for (int c = 0; c < 4; ++c)
                    out.plane(static_cast<Channel>(c))[i] += sigma * draw();
            }
        }
        note << "distorted, snr " << snr_db << " dB, noise seed " << seed;
    }
    else
    {
        note << "distorted, noise-free";
    }
    out.provenance().notes.push_back(note.str());
    out.provenance().faraday_deg.reset();
    out.set_stage(Stage::raw);
    return out;
}

PauliAmplitudes boxcar(const SlcImage &img, int w)
{
    if (w < 1 || w % 2 == 0)
        throw Error("boxcar window must be odd and >= 1");
    const int W = img.width();
    const int H = img.height();
    const int half = w / 2;

    std::array<std::vector<double>, 4> power;
    for (auto &p : power)
        p.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i)
    {
        const Vec4 k = to_pauli(img.at(i)).k;
        for (int c = 0; c < 4; ++c)
            power[c][i] = std::norm(k(c));
    }

    PauliAmplitudes out;
    out.width = W;
    out.height = H;
    for (int c = 0; c < 4; ++c)
    {
        out.k[c].resize(img.size());
        for (int y = 0; y < H; ++y)
            for (int x = 0; x < W; ++x)
            {
                double sum = 0.0;
                int n = 0;
                for (int yy = std::max(0, y - half); yy <= std::min(H - 1, y + half); ++yy)
                    for (int xx = std::max(0, x - half); xx <= std::min(W - 1, x + half); ++xx)
                    {
                        sum += power[c][img.index(xx, yy)];
                        ++n;
                    }
                out.k[c][img.index(x, y)] = std::sqrt(sum / n);
            }
    }
    return out;
}

} // namespace polcal
