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

#include <Eigen/SVD>

#include <cmath>

namespace polcal::testing
{

Vec4 pauli_direct(const ScatteringMatrix &s)
{
    const double r = 1.0 / std::sqrt(2.0);
    return Vec4(r * (s.hh + s.vv), r * (s.hh - s.vv), r * (s.hv + s.vh), r * (s.hv - s.vh));
}

ScatteringMatrix lex_direct(const Vec4 &k)
{
    const double r = 1.0 / std::sqrt(2.0);
    return {r * (k(0) + k(1)), r * (k(2) + k(3)), r * (k(2) - k(3)), r * (k(0) - k(1))};
}

Mat2 inverse_2x2(const Mat2 &m)
{
    const cdouble det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Mat2 inv;
    inv << m(1, 1) / det, -m(0, 1) / det, -m(1, 0) / det, m(0, 0) / det;
    return inv;
}

Mat2 similarity_direct(const Mat2 &t, const Mat2 &s)
{
    const Mat2 ti = inverse_2x2(t);
    Mat2 out = Mat2::Zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    out(i, j) += ti(i, a) * s(a, b) * t(b, j);
    return out;
}

double spectral_norm(const Mat2 &m)
{
    return Eigen::JacobiSVD<Mat2>(m).singularValues()(0);
}

cdouble best_scalar(const SlcImage &truth, const SlcImage &estimate)
{
    cdouble num = 0.0;
    double den = 0.0;
    for (int c = 0; c < 4; ++c)
    {
        const auto &t = truth.plane(static_cast<Channel>(c));
        const auto &e = estimate.plane(static_cast<Channel>(c));
        for (std::size_t i = 0; i < t.size(); ++i)
        {
            num += std::conj(t[i]) * e[i];
            den += std::norm(t[i]);
        }
    }
    return num / den;
}

std::array<double, 4> channel_relative_rms(const SlcImage &truth, const SlcImage &estimate, cdouble g)
{
    std::array<double, 4> out{};
    for (int c = 0; c < 4; ++c)
    {
        const auto &t = truth.plane(static_cast<Channel>(c));
        const auto &e = estimate.plane(static_cast<Channel>(c));
        double err = 0.0, ref = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i)
        {
            err += std::norm(e[i] / g - t[i]);
            ref += std::norm(t[i]);
        }
        out[c] = std::sqrt(err / ref);
    }
    return out;
}

} // namespace polcal::testing
