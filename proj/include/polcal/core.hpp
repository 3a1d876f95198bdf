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

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace polcal
{

using cdouble = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;

/// One pixel's 2x2 complex scattering matrix [[hh, hv], [vh, vv]].
struct ScatteringMatrix
{
    cdouble hh{}, hv{}, vh{}, vv{};

    static ScatteringMatrix from_matrix(const Mat2 &m);
    static ScatteringMatrix diagonal(cdouble a, cdouble b) { return {a, 0.0, 0.0, b}; }
    static ScatteringMatrix identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Mat2 matrix() const;

    /// hv == vh within an absolute tolerance (exact by default).
    bool reciprocal(double tol = 0.0) const { return std::abs(hv - vh) <= tol; }

    bool operator==(const ScatteringMatrix &) const = default;
};

/// Lexicographic scattering vector [hh, hv, vh, vv]: row-major flattening of S.
struct LexVector
{
    Vec4 s = Vec4::Zero();

    static LexVector from(const ScatteringMatrix &m) { return {Vec4(m.hh, m.hv, m.vh, m.vv)}; }
    ScatteringMatrix matrix() const { return {s(0), s(1), s(2), s(3)}; }
};

/// Pauli scattering vector [(hh+vv), (hh-vv), (hv+vh), (hv-vh)] / sqrt(2).
struct PauliVector
{
    Vec4 k = Vec4::Zero();
};

/// The unitary change of basis U_P with k = U_P s.
const Mat4 &pauli_basis();

PauliVector pauli_forward(const LexVector &s);
LexVector pauli_inverse(const PauliVector &k);

inline PauliVector to_pauli(const ScatteringMatrix &m) { return pauli_forward(LexVector::from(m)); }
inline ScatteringMatrix from_pauli(const PauliVector &k) { return pauli_inverse(k).matrix(); }

/// Row-major vectorization: vec(M) = [m00, m01, m10, m11].
Vec4 vec_row_major(const Mat2 &m);
Mat2 unvec_row_major(const Vec4 &v);

/// Kronecker product A (x) B of two 2x2 matrices.
Mat4 kron(const Mat2 &a, const Mat2 &b);

/// Inverse of a 2x2 matrix; throws "singular distortion matrix" when |det| <= tol * ||m||^2.
Mat2 inverse_checked(const Mat2 &m, double tol = 1e-12);

/// Exact Pauli-basis action of the similarity S -> T^-1 S T:
/// A_P = U_P (T^-1 (x) T^T) U_P^-1, valid for any (also non-reciprocal) S.
Mat4 similarity_pauli_exact(const Mat2 &t);

/// Receiver and transmitter distortion matrices of S_obs = R S T + N.
struct DistortionPair
{
    Mat2 R = Mat2::Identity();
    Mat2 T = Mat2::Identity();

    /// Throws unless both matrices are invertible.
    void validate() const;

    /// |t12/t11| <= delta_max and |t21/t22| <= delta_max.
    bool weak_coupling(double delta_max = 0.1) const;
};

/// Parameters of the sparse Pauli-basis distortion matrix
///
///         | 1   0   0   0 |
///  A = m  | 0   1   x1  0 |
///         | 0   x2  C1  0 |
///         | 0   x3  C2  1 |
///
/// built from a transmitter matrix under weak coupling and reciprocity.
struct PauliDistortion
{
    cdouble m = 1.0;
    cdouble c = 1.0;
    cdouble C1 = 1.0;
    cdouble C2 = 0.0;
    cdouble x1 = 0.0;
    cdouble x2 = 0.0;
    cdouble x3 = 0.0;
    Mat4 A = Mat4::Identity();

    /// Assembles the parameters into A (also fixes C1, C2 from c).
    static PauliDistortion from_parameters(cdouble m, cdouble c, cdouble x1, cdouble x2, cdouble x3);
};

/// C1 = (c + 1/c)/2, C2 = (c - 1/c)/2.
cdouble copolar_C1(cdouble c);
cdouble copolar_C2(cdouble c);

PauliDistortion build_pauli_distortion(const Mat2 &t);

/// Closed-form cross ratio x1 = (x3(c^2-1) - x2(c^2+1)) / 2c.
cdouble x1_from(cdouble x2, cdouble x3, cdouble c);

/// Exact inverse of A. Throws "degenerate calibration matrix" when |C1 - x1 x2| <= 1e-9.
Mat4 invert_A(const PauliDistortion &p);

inline constexpr double degenerate_threshold = 1e-9;
inline constexpr double default_delta_max = 0.1;

} // namespace polcal
