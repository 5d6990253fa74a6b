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

#include <cotlap/cyclic.hpp>
#include <cotlap/matrix.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace cotlap {

/// Eigenvalues in ascending order. For a Laplacian, values[0] is the trivial
/// zero eigenvalue as computed (not clamped).
struct Spectrum
{
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
};

struct JacobiOptions
{
    /// Stop once off-diagonal Frobenius norm < tolerance * ||A||_F.
    double tolerance = 1e-13;
    int max_sweeps = 50;
};

/// Cyclic Jacobi rotations on a symmetric matrix. Throws NotSymmetric if
/// |A(i,j) - A(j,i)| > 1e-12 * max(1, max|A|), NoConvergence after
/// max_sweeps.
Spectrum symmetric_eigenvalues(const DenseMatrix& a, const JacobiOptions& opts = {});

Spectrum eigenvalues(const LaplaceMatrix& l, const JacobiOptions& opts = {});

/// lambda_1 + ... + lambda_{n-1}.
double sum_nontrivial(const Spectrum& s);

/// lambda_1 * ... * lambda_{n-1}; accumulated in log space when n > 30.
double product_nontrivial(const Spectrum& s);

/// lambda_i lambda_j summed over 1 <= i < j <= n-1.
double pair_sum_nontrivial(const Spectrum& s);

/// Determinant of the principal minor of the cyclic Laplacian with the first
/// row and column removed, by the three-term recurrence
///   D_1 = a_1 + a_2,  D_k = (a_k + a_{k+1}) D_{k-1} - a_k^2 D_{k-2},  D_0 = 1
/// (1-based a). Equals e_{n-1}(a).
double continuant_det(const CotVector& a);

/// n * continuant_det(a): the product of the nontrivial eigenvalues of the
/// cyclic Laplacian.
double matrix_tree_product(const CotVector& a);

/// Determinant of the Laplacian with row and column k removed.
double principal_minor_det(const LaplaceMatrix& l, std::size_t k);

/// Smallest eigenvalue >= -tol * trace.
bool is_positive_semidefinite(const LaplaceMatrix& l, double tol = 1e-9);

}  // namespace cotlap
