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

#include <cstddef>
#include <span>
#include <vector>

namespace cotlap {

/// Dense square matrix, row-major.
class DenseMatrix
{
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
    DenseMatrix(std::size_t n, std::vector<double> row_major);

    static DenseMatrix identity(std::size_t n);

    std::size_t dim() const noexcept { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<const double> data() const noexcept { return data_; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

    double trace() const;
    double max_abs() const;
    double frobenius_norm() const;

    /// Largest |A(i,j) - A(j,i)|.
    double asymmetry() const;

    /// Copy with row and column k removed.
    DenseMatrix without(std::size_t k) const;

    /// y = A x
    std::vector<double> apply(std::span<const double> x) const;

    /// x^T A x
    double quadratic_form(std::span<const double> x) const;

    /// Determinant by LU with partial pivoting.
    double determinant() const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// Largest entrywise |A - B|; dimensions must agree.
double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace cotlap
