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
#include "properties.hpp"
#include "test_helpers.hpp"

#include "polcal/core.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace polcal;
using namespace polcal::testing;

namespace
{

const double rt2 = std::sqrt(2.0);

Mat2 eq20_T()
{
    Mat2 t;
    t << 0.9986, cdouble(-0.0589, -0.034), 0.0523, cdouble(1.1243, 0.6491);
    return t;
}

} // namespace

TEST(Pauli, TrihedralMapsToFirstComponent)
{
    const PauliVector k = pauli_forward({Vec4(1, 0, 0, 1)});
    EXPECT_LE(max_abs_diff(k.k, Vec4(rt2, 0, 0, 0)), 1e-15);
}

TEST(Pauli, DihedralMapsToSecondComponent)
{
    const PauliVector k = pauli_forward({Vec4(1, 0, 0, -1)});
    EXPECT_LE(max_abs_diff(k.k, Vec4(0, rt2, 0, 0)), 1e-15);
}

TEST(Pauli, InverseExamples)
{
    EXPECT_LE(max_abs_diff(pauli_inverse({Vec4(rt2, 0, 0, 0)}).s, Vec4(1, 0, 0, 1)), 1e-15);
    EXPECT_LE(max_abs_diff(pauli_inverse({Vec4(0, 0, rt2, 0)}).s, Vec4(0, 1, 1, 0)), 1e-15);
}

TEST(Pauli, ReciprocalScattererHasNoFourthComponent)
{
    Rng rng(3);
    for (int i = 0; i < 100; ++i)
        EXPECT_EQ(to_pauli(rng.reciprocal_scattering()).k(3), cdouble(0.0));
}

TEST(PauliProperty, Unitarity)
{
    const auto r = prop_pauli_unitarity();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(PauliProperty, RoundTripAndDirectFormula)
{
    const auto r = prop_pauli_round_trip();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Kronecker, ProductLayout)
{
    Mat2 a, b;
    a << 1, 2, 3, 4;
    b << 0, 5, 6, 7;
    const Mat4 k = kron(a, b);
    EXPECT_EQ(k(0, 1), cdouble(5));
    EXPECT_EQ(k(1, 3), cdouble(14));
    EXPECT_EQ(k(3, 2), cdouble(24));
    EXPECT_EQ(k(2, 0), cdouble(0));
}

TEST(KroneckerProperty, RowMajorConvention)
{
    const auto r = prop_kronecker_convention();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(SimilarityExact, IdentityTransmitter)
{
    EXPECT_LE(max_abs_diff(similarity_pauli_exact(Mat2::Identity()), Mat4::Identity()), 1e-15);
}

TEST(SimilarityExact, DiagonalTransmitterOnReciprocalInput)
{
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial)
    {
        const cdouble t11 = rng.complex_normal();
        const cdouble t22 = rng.complex_normal();
        Mat2 t = Mat2::Zero();
        t(0, 0) = t11;
        t(1, 1) = t22;
        // T^-1 S T with diagonal T scales hv by c and vh by 1/c.
        const cdouble c = t22 / t11;
        const cdouble C1 = 0.5 * (c + 1.0 / c);
        const cdouble C2 = 0.5 * (c - 1.0 / c);

        const Vec4 k(rng.complex_normal(), rng.complex_normal(), rng.complex_normal(), 0.0);
        const Vec4 out = similarity_pauli_exact(t) * k;
        EXPECT_LE(std::abs(out(0) - k(0)), 1e-12);
        EXPECT_LE(std::abs(out(1) - k(1)), 1e-12);
        EXPECT_LE(std::abs(out(2) - C1 * k(2)), 1e-12 * (1 + std::abs(C1 * k(2))));
        EXPECT_LE(std::abs(out(3) - C2 * k(2)), 1e-12 * (1 + std::abs(C2 * k(2))));
    }
}

TEST(SimilarityExact, RotationIsBlockRotationByTwiceTheAngle)
{
    for (double th : {0.1, 0.3, 1.0, -0.7})
    {
        Mat2 r;
        r << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
        // Expansion of R(-th) S R(th) in Pauli components.
        Mat4 expect = Mat4::Identity();
        expect(1, 1) = std::cos(2 * th);
        expect(1, 2) = std::sin(2 * th);
        expect(2, 1) = -std::sin(2 * th);
        expect(2, 2) = std::cos(2 * th);
        EXPECT_LE(max_abs_diff(similarity_pauli_exact(r), expect), 1e-14);
    }
}

TEST(SimilarityExact, SingularTransmitterRejected)
{
    Mat2 t;
    t << 1, 2, 2, 4;
    EXPECT_TRUE(throws_error([&] { similarity_pauli_exact(t); }, "singular distortion matrix"));
}

TEST(BuildPauliDistortion, IdentityTransmitter)
{
    const PauliDistortion p = build_pauli_distortion(Mat2::Identity());
    EXPECT_EQ(p.m, cdouble(1.0));
    EXPECT_EQ(p.c, cdouble(1.0));
    EXPECT_EQ(p.C1, cdouble(1.0));
    EXPECT_EQ(p.C2, cdouble(0.0));
    EXPECT_EQ(p.x1, cdouble(0.0));
    EXPECT_EQ(p.x2, cdouble(0.0));
    EXPECT_EQ(p.x3, cdouble(0.0));
    EXPECT_LE(max_abs_diff(p.A, Mat4::Identity()), 0.0);
}

TEST(BuildPauliDistortion, WorkedExampleTransmitter)
{
    // Frozen from direct arithmetic on the reference transmitter entries.
    const PauliDistortion p = build_pauli_distortion(eq20_T());
    expect_complex_near(p.c, {1.1258762267174045, 0.6500100140196274}, 1e-13);
    expect_complex_near(p.C1, {0.8960158507229414, 0.13270690212399355}, 1e-13);
    expect_complex_near(p.C2, {0.22986037599446307, 0.5173031118956339}, 1e-13);
    // Rounded forms quoted alongside the example.
    expect_complex_near(p.C1, {0.8959, 0.1325}, 5e-4);
    expect_complex_near(p.C2, {0.2295, 0.5173}, 5e-4);
}

TEST(BuildPauliDistortion, InvariantsOnRandomTransmitters)
{
    Rng rng(8);
    for (int i = 0; i < 500; ++i)
    {
        const Mat2 t = rng.weak_coupling(0.1);
        const PauliDistortion p = build_pauli_distortion(t);
        EXPECT_LE(std::abs(p.C1 * p.C1 - p.C2 * p.C2 - 1.0), 1e-12);
        EXPECT_LE(std::abs(p.x1 - x1_from(p.x2, p.x3, p.c)), 1e-12);

        // Sparsity: row/column 0 and 3 zero except the documented entries.
        for (int j = 1; j < 4; ++j)
        {
            EXPECT_EQ(p.A(0, j), cdouble(0.0));
            EXPECT_EQ(p.A(j, 0), cdouble(0.0));
        }
        EXPECT_EQ(p.A(1, 3), cdouble(0.0));
        EXPECT_EQ(p.A(2, 3), cdouble(0.0));
        EXPECT_EQ(p.A(0, 0), p.m);
        EXPECT_EQ(p.A(3, 3), p.m);
        EXPECT_LE(std::abs(p.A(3, 1) - p.m * p.x3), 1e-15);
        EXPECT_LE(std::abs(p.A(3, 2) - p.m * p.C2), 1e-15);
    }
}

TEST(BuildPauliDistortion, SecondOrderAgreementWithExactAction)
{
    Rng rng(9);
    Mat4 proj = Mat4::Identity();
    proj(3, 3) = 0.0;
    for (double delta : {0.1, 0.05})
        for (int i = 0; i < 200; ++i)
        {
            const Mat2 t = rng.weak_coupling(delta);
            const double err = ((build_pauli_distortion(t).A - similarity_pauli_exact(t)) * proj).norm();
            EXPECT_LE(err, 3.0 * delta * delta);
        }
}

TEST(BuildPauliDistortionProperty, QuadraticErrorScaling)
{
    const auto r = prop_weak_coupling_quadratic();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(BuildPauliDistortion, ZeroCopolarGainRejected)
{
    Mat2 t;
    t << 0.0, 1.0, 1.0, 1.0;
    EXPECT_TRUE(throws_error([&] { build_pauli_distortion(t); }, "copolar gain zero"));
}

TEST(X1From, Examples)
{
    EXPECT_EQ(x1_from(0.0, 0.0, {1.3, 0.2}), cdouble(0.0));
    const cdouble x2(0.03, -0.02), x3(-0.01, 0.05);
    expect_complex_near(x1_from(x2, x3, 1.0), -x2, 1e-16);
    EXPECT_TRUE(throws_error([&] { x1_from(x2, x3, 0.0); }, "zero"));
}

TEST(X1From, MatchesRatioDefinition)
{
    Rng rng(10);
    for (int i = 0; i < 1000; ++i)
    {
        const Mat2 t = rng.mat2();
        const cdouble t11 = t(0, 0), t12 = t(0, 1), t21 = t(1, 0), t22 = t(1, 1);
        const cdouble ratio_form = t21 / t11 - t12 / t22;
        const cdouble closed =
            x1_from(t12 / t11 - t21 / t22, t12 / t11 + t21 / t22, t22 / t11);
        EXPECT_LE(std::abs(closed - ratio_form), 1e-12 * (1.0 + std::abs(ratio_form)));
    }
}

TEST(InvertA, Identity)
{
    EXPECT_LE(max_abs_diff(invert_A(PauliDistortion{}), Mat4::Identity()), 0.0);
}

TEST(InvertA, NoCrossTalkSpecialization)
{
    const cdouble c(1.4, -0.3);
    const PauliDistortion p = PauliDistortion::from_parameters(1.0, c, 0.0, 0.0, 0.0);
    const cdouble C1 = 0.5 * (c + 1.0 / c), C2 = 0.5 * (c - 1.0 / c);
    Mat4 expect = Mat4::Identity();
    expect(2, 2) = 1.0 / C1;
    expect(3, 2) = -C2 / C1;
    EXPECT_LE(max_abs_diff(invert_A(p), expect), 1e-15);
}

TEST(InvertAProperty, ExactInverse)
{
    const auto r = prop_invert_A_exact();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(InvertA, DegenerateRejected)
{
    // c = i gives C1 = 0.
    const PauliDistortion p = PauliDistortion::from_parameters(1.0, {0.0, 1.0}, 0.0, 0.0, 0.0);
    EXPECT_TRUE(throws_error([&] { invert_A(p); }, "degenerate calibration matrix"));
}

TEST(DistortionPair, WeakCouplingFlag)
{
    DistortionPair d;
    EXPECT_TRUE(d.weak_coupling());
    d.T << 1.0, 0.05, 0.2, 1.0;
    EXPECT_FALSE(d.weak_coupling());
    EXPECT_TRUE(d.weak_coupling(0.25));
    d.T << 1.0, 0.0, 0.0, 0.0;
    EXPECT_FALSE(d.weak_coupling());
    EXPECT_TRUE(throws_error([&] { d.validate(); }, "singular"));
}
