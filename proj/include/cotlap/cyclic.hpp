/*
 * Copyright 2026 The cotlap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// Cyclic polygons inscribed in the unit circle.
//
// A cyclic n-gon is described by the half-angles theta_0..theta_{n-1} of the
// arcs its vertices cut from the circumcircle, so sum(theta) = pi. Arc k runs
// from vertex k to vertex k+1 (mod n). All formulas are written in terms of
// a_k = cot(theta_k).
//
// Index mapping: the usual 1-based notation a_1..a_n with a_n closing the
// cycle corresponds to a[0]..a[n-1] here. The Laplacian has
//   L(k, k+1 mod n) = -a[k],   L(k, k) = a[k-1 mod n] + a[k].

#include <cotlap/matrix.hpp>

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace cotlap {

inline constexpr double kPi = std::numbers::pi;

/// |sum(theta) - pi| allowed by make_arc_profile.
inline constexpr double kArcSumTolerance = 1e-9;
/// Arcs narrower than this are rejected; cot would exceed ~1e12.
inline constexpr double kMinArcAngle = 1e-12;
/// Residual allowed by the charpoly pre-checks (inputs may come from degrees).
inline constexpr double kIdentityTolerance = 1e-6;

class ArcProfile
{
public:
    std::size_t size() const noexcept { return theta_.size(); }
    std::span<const double> theta() const noexcept { return theta_; }
    double operator[](std::size_t i) const { return theta_[i]; }

    friend ArcProfile make_arc_profile(std::span<const double> theta);

private:
    explicit ArcProfile(std::vector<double> theta) : theta_(std::move(theta)) {}
    std::vector<double> theta_;
};

/// Validates membership in the open simplex {theta_i in (0, pi), sum = pi}.
/// Angles are stored exactly as given.
ArcProfile make_arc_profile(std::span<const double> theta);

/// All arcs equal to pi/n.
ArcProfile regular_profile(std::size_t n);

/// a_k = cot(theta_k).
class CotVector
{
public:
    explicit CotVector(std::vector<double> a) : a_(std::move(a)) {}

    std::size_t size() const noexcept { return a_.size(); }
    std::span<const double> values() const noexcept { return a_; }
    double operator[](std::size_t i) const { return a_[i]; }

private:
    std::vector<double> a_;
};

/// cot computed as cos/sin.
double cot(double theta);

CotVector cot_vector(const ArcProfile& p);

/// d/dtheta cot(theta) = -(1 + cot^2(theta)).
double dcot(double theta);

/// e_k(a_0..a_{n-1}) by the one-pass prefix recurrence e_j <- e_j + x e_{j-1}.
/// Throws IndexOutOfRange unless 0 <= k <= n.
double elementary_symmetric(std::span<const double> a, int k);
double elementary_symmetric(const CotVector& a, int k);

/// All of e_0..e_n in one pass.
std::vector<double> elementary_symmetric_all(std::span<const double> a);

/// Symmetric matrix with zero row sums.
class LaplaceMatrix
{
public:
    /// Validates symmetry and zero row sums (1e-10 * max|entry|).
    static LaplaceMatrix from_dense(DenseMatrix m);

    std::size_t dim() const noexcept { return m_.dim(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const DenseMatrix& dense() const noexcept { return m_; }
    double trace() const { return m_.trace(); }

    /// Largest |row sum|.
    double row_sum_residual() const;

    /// Same matrix scaled by s (s >= 0).
    LaplaceMatrix scaled(double s) const;

private:
    explicit LaplaceMatrix(DenseMatrix m) : m_(std::move(m)) {}
    DenseMatrix m_;

    friend LaplaceMatrix assemble_cyclic(const CotVector& a);
    friend class LaplaceBuilder;
};

/// Accumulates edge weights into a Laplacian without intermediate validation.
class LaplaceBuilder
{
public:
    explicit LaplaceBuilder(std::size_t n) : m_(n) {}
    void add_edge(std::size_t i, std::size_t j, double w);
    LaplaceMatrix build() &&;

private:
    DenseMatrix m_;
};

LaplaceMatrix assemble_cyclic(const CotVector& a);

/// Coefficients of det(L - xI), highest power first.
struct CharPolyCoeffs
{
    std::vector<double> coeffs;

    std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    double operator()(double x) const;
};

/// -x^3 + 2 e1 x^2 - 3x. Requires e2 = 1 within kIdentityTolerance.
CharPolyCoeffs charpoly3(const CotVector& a);

/// x^4 - 2 e1 x^3 + g x^2 - 4 e1 x, with
/// g = 3(a0a1 + a1a2 + a2a3 + a3a0) + 4(a0a2 + a1a3).
/// Requires e3 = e1 within kIdentityTolerance * (1 + |e1|).
CharPolyCoeffs charpoly4(const CotVector& a);

/// 3(a0a1 + a1a2 + a2a3 + a3a0) + 4(a0a2 + a1a3); n must be 4.
double quadrilateral_pair_coefficient(std::span<const double> a);

/// Largest eigenvalue of a triangle Laplacian, e1 + sqrt(e1^2 - 3).
/// The smaller one is 3 / lambda2.
double lambda2_closed_form(const CotVector& a);

}  // namespace cotlap
