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

#include "polcal/core.hpp"
#include "polcal/error.hpp"

#include <cmath>

namespace polcal
{

ScatteringMatrix ScatteringMatrix::from_matrix(const Mat2 &m)
{
    return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

Mat2 ScatteringMatrix::matrix() const
{
    Mat2 m;
    m << hh, hv, vh, vv;
    return m;
}

const Mat4 &pauli_basis()
{
    static const Mat4 up = [] {
        Mat4 u;
        u << 1, 0, 0, 1,
             1, 0, 0, -1,
             0, 1, 1, 0,
             0, 1, -1, 0;
        return Mat4(u / std::sqrt(2.0));
    }();
    return up;
}

PauliVector pauli_forward(const LexVector &s)
{
    return {pauli_basis() * s.s};
}

LexVector pauli_inverse(const PauliVector &k)
{
    // U_P is real orthogonal
    return {pauli_basis().transpose() * k.k};
}

Vec4 vec_row_major(const Mat2 &m)
{
    return Vec4(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

Mat2 unvec_row_major(const Vec4 &v)
{
    Mat2 m;
    m << v(0), v(1), v(2), v(3);
    return m;
}

Mat4 kron(const Mat2 &a, const Mat2 &b)
{
    Mat4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

Mat2 inverse_checked(const Mat2 &m, double tol)
{
    const cdouble det = m.determinant();
    const double scale = m.squaredNorm();
    if (!(std::abs(det) > tol * scale))
        throw Error("singular distortion matrix");
    Mat2 inv;
    inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return inv / det;
}

Mat4 similarity_pauli_exact(const Mat2 &t)
{
    // vec(A S B) = (A (x) B^T) vec(S) for row-major vec
    const Mat4 lex = kron(inverse_checked(t), t.transpose());
    return pauli_basis() * lex * pauli_basis().transpose();
}

void DistortionPair::validate() const
{
    inverse_checked(R);
    inverse_checked(T);
}

bool DistortionPair::weak_coupling(double delta_max) const
{
    if (T(0, 0) == 0.0 || T(1, 1) == 0.0)
        return false;
    return std::abs(T(0, 1) / T(0, 0)) <= delta_max && std::abs(T(1, 0) / T(1, 1)) <= delta_max;
}

cdouble copolar_C1(cdouble c) { return 0.5 * (c + 1.0 / c); }
cdouble copolar_C2(cdouble c) { return 0.5 * (c - 1.0 / c); }

PauliDistortion PauliDistortion::from_parameters(cdouble m, cdouble c, cdouble x1, cdouble x2, cdouble x3)
{
    PauliDistortion p;
    p.m = m;
    p.c = c;
    p.C1 = copolar_C1(c);
    p.C2 = copolar_C2(c);
    p.x1 = x1;
    p.x2 = x2;
    p.x3 = x3;
    Mat4 a = Mat4::Zero();
    a(0, 0) = 1.0;
    a(1, 1) = 1.0;
    a(1, 2) = x1;
    a(2, 1) = x2;
    a(2, 2) = p.C1;
    a(3, 1) = x3;
    a(3, 2) = p.C2;
    a(3, 3) = 1.0;
    p.A = m * a;
    return p;
}

PauliDistortion build_pauli_distortion(const Mat2 &t)
{
    const cdouble t11 = t(0, 0), t12 = t(0, 1), t21 = t(1, 0), t22 = t(1, 1);
    if (t11 == 0.0 || t22 == 0.0)
        throw Error("copolar gain zero");
    inverse_checked(t);

    const cdouble m = t11 * t22 / (t11 * t22 - t12 * t21);
    const cdouble c = t22 / t11;
    const cdouble x1 = t21 / t11 - t12 / t22;
    const cdouble x2 = t12 / t11 - t21 / t22;
    const cdouble x3 = t12 / t11 + t21 / t22;
    return PauliDistortion::from_parameters(m, c, x1, x2, x3);
}

cdouble x1_from(cdouble x2, cdouble x3, cdouble c)
{
    if (c == 0.0)
        throw Error("copolar ratio c is zero");
    const cdouble c2 = c * c;
    return (x3 * (c2 - 1.0) - x2 * (c2 + 1.0)) / (2.0 * c);
}

Mat4 invert_A(const PauliDistortion &p)
{
    const cdouble det = p.C1 - p.x1 * p.x2;
    if (std::abs(det) <= degenerate_threshold || p.m == 0.0)
        throw Error("degenerate calibration matrix");

    const cdouble a42 = p.x2 * p.C2 - p.C1 * p.x3;
    const cdouble a43 = p.x1 * p.x3 - p.C2;

    Mat4 inv = Mat4::Zero();
    inv(0, 0) = det;
    inv(1, 1) = p.C1;
    inv(1, 2) = -p.x1;
    inv(2, 1) = -p.x2;
    inv(2, 2) = 1.0;
    inv(3, 1) = a42;
    inv(3, 2) = a43;
    inv(3, 3) = det;
    return inv / (p.m * det);
}

} // namespace polcal
