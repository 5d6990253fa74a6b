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
#include <cotlap/error.hpp>
#include <cotlap/matrix.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace cotlap {

std::string_view error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::TooFewArcs: return "TooFewArcs";
    case ErrorCode::NonPositiveAngle: return "NonPositiveAngle";
    case ErrorCode::SumMismatch: return "SumMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::EdgeNotFound: return "EdgeNotFound";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::StartNotInterior: return "StartNotInterior";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::InvalidTarget: return "InvalidTarget";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

DenseMatrix::DenseMatrix(std::size_t n, std::vector<double> row_major)
    : n_(n), data_(std::move(row_major))
{
    if (data_.size() != n * n) {
        throw Error(ErrorCode::LengthMismatch,
                    "matrix data has " + std::to_string(data_.size()) +
                        " entries, expected " + std::to_string(n * n));
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n)
{
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double DenseMatrix::trace() const
{
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double DenseMatrix::max_abs() const
{
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

double DenseMatrix::frobenius_norm() const
{
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

double DenseMatrix::asymmetry() const
{
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
    return m;
}

DenseMatrix DenseMatrix::without(std::size_t k) const
{
    if (k >= n_) throw Error(ErrorCode::IndexOutOfRange, "minor index out of range");
    DenseMatrix m(n_ - 1);
    for (std::size_t i = 0, r = 0; i < n_; ++i) {
        if (i == k) continue;
        for (std::size_t j = 0, c = 0; j < n_; ++j) {
            if (j == k) continue;
            m(r, c++) = (*this)(i, j);
        }
        ++r;
    }
    return m;
}

std::vector<double> DenseMatrix::apply(std::span<const double> x) const
{
    if (x.size() != n_) throw Error(ErrorCode::LengthMismatch, "vector length does not match matrix");
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double DenseMatrix::quadratic_form(std::span<const double> x) const
{
    const auto y = apply(x);
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) s += x[i] * y[i];
    return s;
}

double DenseMatrix::determinant() const
{
    if (n_ == 0) return 1.0;
    std::vector<double> a = data_;
    double det = 1.0;
    for (std::size_t k = 0; k < n_; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n_; ++i)
            if (std::abs(a[i * n_ + k]) > std::abs(a[p * n_ + k])) p = i;
        if (a[p * n_ + k] == 0.0) return 0.0;
        if (p != k) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(a[k * n_ + j], a[p * n_ + j]);
            det = -det;
        }
        const double pivot = a[k * n_ + k];
        det *= pivot;
        for (std::size_t i = k + 1; i < n_; ++i) {
            const double f = a[i * n_ + k] / pivot;
            if (f == 0.0) continue;
            for (std::size_t j = k + 1; j < n_; ++j) a[i * n_ + j] -= f * a[k * n_ + j];
        }
    }
    return det;
}

double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.dim() != b.dim()) throw Error(ErrorCode::LengthMismatch, "matrix dimensions differ");
    double m = 0.0;
    const auto da = a.data();
    const auto db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) m = std::max(m, std::abs(da[i] - db[i]));
    return m;
}

}  // namespace cotlap
