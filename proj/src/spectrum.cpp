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
#include <cotlap/spectrum.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace cotlap {

namespace {

double off_diagonal_norm(const DenseMatrix& a)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

/// Zeroes a(p, q) with a symmetric two-sided rotation.
void rotate(DenseMatrix& a, std::size_t p, std::size_t q)
{
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double app = a(p, p);
    const double aqq = a(q, q);
    const double theta = (aqq - app) / (2.0 * apq);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double tau = s / (1.0 + c);

    a(p, p) = app - t * apq;
    a(q, q) = aqq + t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        if (r == p || r == q) continue;
        const double arp = a(r, p);
        const double arq = a(r, q);
        const double new_rp = arp - s * (arq + tau * arp);
        const double new_rq = arq + s * (arp - tau * arq);
        a(r, p) = new_rp;
        a(p, r) = new_rp;
        a(r, q) = new_rq;
        a(q, r) = new_rq;
    }
}

}  // namespace

Spectrum symmetric_eigenvalues(const DenseMatrix& input, const JacobiOptions& opts)
{
    const double scale = input.max_abs();
    if (input.asymmetry() > 1e-12 * std::max(1.0, scale)) {
        throw Error(ErrorCode::NotSymmetric, "eigensolver input is not symmetric");
    }
    DenseMatrix a = input;
    const std::size_t n = a.dim();
    const double target = opts.tolerance * a.frobenius_norm();

    int sweep = 0;
    while (off_diagonal_norm(a) >= target && off_diagonal_norm(a) > 0.0) {
        if (sweep++ == opts.max_sweeps) {
            throw Error(ErrorCode::NoConvergence,
                        "Jacobi did not converge in " + std::to_string(opts.max_sweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
    }

    Spectrum s;
    s.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.values[i] = a(i, i);
    std::stable_sort(s.values.begin(), s.values.end());
    return s;
}

Spectrum eigenvalues(const LaplaceMatrix& l, const JacobiOptions& opts)
{
    return symmetric_eigenvalues(l.dense(), opts);
}

double sum_nontrivial(const Spectrum& s)
{
    double sum = 0.0;
    for (std::size_t i = 1; i < s.size(); ++i) sum += s[i];
    return sum;
}

double product_nontrivial(const Spectrum& s)
{
    if (s.size() > 31) {
        double log_sum = 0.0;
        for (std::size_t i = 1; i < s.size(); ++i) log_sum += std::log(s[i]);
        return std::exp(log_sum);
    }
    double prod = 1.0;
    for (std::size_t i = 1; i < s.size(); ++i) prod *= s[i];
    return prod;
}

double pair_sum_nontrivial(const Spectrum& s)
{
    double sum = 0.0;
    for (std::size_t i = 1; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) sum += s[i] * s[j];
    return sum;
}

double continuant_det(const CotVector& a)
{
    const std::size_t n = a.size();
    if (n < 3) throw Error(ErrorCode::TooFewArcs, "continuant needs n >= 3");
    // 0-based: minor rows 1..n-1 have diagonal a[k-1] + a[k] and
    // off-diagonal -a[k] between rows k and k+1.
    // Long double: the recurrence cancels heavily when neighbouring arcs are narrow.
    long double prev2 = 1.0L;
    long double prev1 = static_cast<long double>(a[0]) + a[1];
    for (std::size_t k = 2; k < n; ++k) {
        const long double ak = a[k - 1];
        const long double next = (ak + a[k]) * prev1 - ak * ak * prev2;
        prev2 = prev1;
        prev1 = next;
    }
    return static_cast<double>(prev1);
}

double matrix_tree_product(const CotVector& a)
{
    return static_cast<double>(a.size()) * continuant_det(a);
}

double principal_minor_det(const LaplaceMatrix& l, std::size_t k)
{
    return l.dense().without(k).determinant();
}

bool is_positive_semidefinite(const LaplaceMatrix& l, double tol)
{
    const Spectrum s = eigenvalues(l);
    return s.size() == 0 || s[0] >= -tol * std::abs(l.trace());
}

}  // namespace cotlap
