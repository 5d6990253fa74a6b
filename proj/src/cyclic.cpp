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
#include <cotlap/cyclic.hpp>
#include <cotlap/error.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace cotlap {

namespace {

std::string describe(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

ArcProfile make_arc_profile(std::span<const double> theta)
{
    if (theta.size() < 3) {
        throw Error(ErrorCode::TooFewArcs,
                    "need at least 3 arcs, got " + std::to_string(theta.size()));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < theta.size(); ++i) {
        const double t = theta[i];
        if (!std::isfinite(t) || t < kMinArcAngle || t >= kPi) {
            throw Error(ErrorCode::NonPositiveAngle,
                        "arc " + std::to_string(i) + " = " + describe(t) + " is outside (0, pi)");
        }
        sum += t;
    }
    if (std::abs(sum - kPi) > kArcSumTolerance) {
        throw Error(ErrorCode::SumMismatch,
                    "arc half-angles sum to " + describe(sum) + ", expected pi");
    }
    return ArcProfile(std::vector<double>(theta.begin(), theta.end()));
}

ArcProfile regular_profile(std::size_t n)
{
    if (n < 3) throw Error(ErrorCode::TooFewArcs, "need at least 3 arcs, got " + std::to_string(n));
    const std::vector<double> theta(n, kPi / static_cast<double>(n));
    return make_arc_profile(theta);
}

double cot(double theta)
{
    return std::cos(theta) / std::sin(theta);
}

CotVector cot_vector(const ArcProfile& p)
{
    std::vector<double> a(p.size());
    std::transform(p.theta().begin(), p.theta().end(), a.begin(), [](double t) { return cot(t); });
    return CotVector(std::move(a));
}

double dcot(double theta)
{
    const double a = cot(theta);
    return -(1.0 + a * a);
}

std::vector<double> elementary_symmetric_all(std::span<const double> a)
{
    // Extended accumulators: with two narrow arcs the terms reach ~1e8 and
    // cancel down to O(1).
    std::vector<long double> e(a.size() + 1, 0.0L);
    e[0] = 1.0L;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j >= 1; --j) e[j] += a[i] * e[j - 1];
    return {e.begin(), e.end()};
}

double elementary_symmetric(std::span<const double> a, int k)
{
    if (k < 0 || static_cast<std::size_t>(k) > a.size()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "e_k needs 0 <= k <= " + std::to_string(a.size()) + ", got " + std::to_string(k));
    }
    const auto kk = static_cast<std::size_t>(k);
    std::vector<long double> e(kk + 1, 0.0L);
    e[0] = 1.0L;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = std::min(i + 1, kk); j >= 1; --j) e[j] += a[i] * e[j - 1];
    return static_cast<double>(e[kk]);
}

double elementary_symmetric(const CotVector& a, int k)
{
    return elementary_symmetric(a.values(), k);
}

LaplaceMatrix LaplaceMatrix::from_dense(DenseMatrix m)
{
    const double scale = std::max(m.max_abs(), 1e-300);
    if (m.asymmetry() > 1e-12 * std::max(1.0, scale)) {
        throw Error(ErrorCode::NotSymmetric, "Laplace matrix must be symmetric");
    }
    LaplaceMatrix l(std::move(m));
    if (l.row_sum_residual() > 1e-10 * scale) {
        throw Error(ErrorCode::InvalidArgument, "Laplace matrix rows must sum to zero");
    }
    return l;
}

double LaplaceMatrix::row_sum_residual() const
{
    double worst = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) {
        double s = 0.0;
        for (double v : m_.row(i)) s += v;
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

LaplaceMatrix LaplaceMatrix::scaled(double s) const
{
    DenseMatrix m = m_;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) m(i, j) *= s;
    return LaplaceMatrix(std::move(m));
}

void LaplaceBuilder::add_edge(std::size_t i, std::size_t j, double w)
{
    m_(i, j) -= w;
    m_(j, i) -= w;
    m_(i, i) += w;
    m_(j, j) += w;
}

LaplaceMatrix LaplaceBuilder::build() &&
{
    return LaplaceMatrix(std::move(m_));
}

LaplaceMatrix assemble_cyclic(const CotVector& a)
{
    const std::size_t n = a.size();
    if (n < 3) throw Error(ErrorCode::TooFewArcs, "cyclic Laplacian needs n >= 3");
    // Written entry by entry so the diagonal is exactly a[k-1] + a[k].
    DenseMatrix m(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t next = (k + 1) % n;
        const std::size_t prev = (k + n - 1) % n;
        m(k, k) = a[prev] + a[k];
        m(k, next) = -a[k];
        m(next, k) = -a[k];
    }
    return LaplaceMatrix(std::move(m));
}

double CharPolyCoeffs::operator()(double x) const
{
    double v = 0.0;
    for (double c : coeffs) v = v * x + c;
    return v;
}

CharPolyCoeffs charpoly3(const CotVector& a)
{
    if (a.size() != 3) throw Error(ErrorCode::ArityMismatch, "charpoly3 needs n = 3");
    const double e2 = elementary_symmetric(a, 2);
    if (std::abs(e2 - 1.0) > kIdentityTolerance) {
        throw Error(ErrorCode::IdentityViolation,
                    "e2(a) = " + describe(e2) + " but a Euclidean triangle has e2 = 1");
    }
    const double e1 = elementary_symmetric(a, 1);
    return {{-1.0, 2.0 * e1, -3.0, 0.0}};
}

double quadrilateral_pair_coefficient(std::span<const double> a)
{
    if (a.size() != 4) throw Error(ErrorCode::ArityMismatch, "needs n = 4");
    return 3.0 * (a[0] * a[1] + a[1] * a[2] + a[2] * a[3] + a[3] * a[0]) +
           4.0 * (a[0] * a[2] + a[1] * a[3]);
}

CharPolyCoeffs charpoly4(const CotVector& a)
{
    if (a.size() != 4) throw Error(ErrorCode::ArityMismatch, "charpoly4 needs n = 4");
    const double e1 = elementary_symmetric(a, 1);
    const double e3 = elementary_symmetric(a, 3);
    if (std::abs(e3 - e1) > kIdentityTolerance * (1.0 + std::abs(e1))) {
        throw Error(ErrorCode::IdentityViolation,
                    "e3(a) = " + describe(e3) + " differs from e1(a) = " + describe(e1));
    }
    return {{1.0, -2.0 * e1, quadrilateral_pair_coefficient(a.values()), -4.0 * e1, 0.0}};
}

double lambda2_closed_form(const CotVector& a)
{
    if (a.size() != 3) throw Error(ErrorCode::ArityMismatch, "lambda2_closed_form needs n = 3");
    const double e1 = elementary_symmetric(a, 1);
    const double disc = e1 * e1 - 3.0;
    if (disc < -1e-12) {
        throw Error(ErrorCode::NegativeDiscriminant, "e1^2 - 3 = " + describe(disc) + " < 0; not a triangle");
    }
    // With e2 = 1, e1^2 - 3 = e1^2 - 3 e2 = sum over pairs (a_i - a_j)^2 / 2.
    // The pair form has no cancellation at the double root (equilateral case).
    const double d01 = a[0] - a[1], d12 = a[1] - a[2], d20 = a[2] - a[0];
    return e1 + std::sqrt(0.5 * (d01 * d01 + d12 * d12 + d20 * d20));
}

}  // namespace cotlap
