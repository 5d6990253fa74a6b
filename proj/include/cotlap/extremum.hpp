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

// Extremal problems over the arc simplex {theta_i > 0, sum theta_i = pi}.

#include <cotlap/cyclic.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cotlap {

enum class Objective {
    SumCot,   ///< e_1(a) = a_0 + ... + a_{n-1}
    GQuad,    ///< 3(a0a1 + a1a2 + a2a3 + a3a0) + 4(a0a2 + a1a3), n = 4 only
    ESym,     ///< e_{n-1}(a)
    Lambda1,  ///< first positive eigenvalue of the cyclic Laplacian
};

std::string_view objective_name(Objective obj) noexcept;
/// Accepts "sumcot", "gquad" / "g4", "esym", "lambda1" (case-insensitive).
std::optional<Objective> parse_objective(std::string_view name);

double evaluate(Objective obj, const ArcProfile& p);

/// Unconstrained partials d f / d theta_i. Lambda1 throws Unsupported.
std::vector<double> gradient(Objective obj, const ArcProfile& p);

/// Same as above on a raw angle vector; no simplex validation.
double evaluate(Objective obj, std::span<const double> theta);
std::vector<double> gradient(Objective obj, std::span<const double> theta);

struct LagrangeResidual
{
    double residual = 0.0;    ///< max_i |d_i f - y|
    double multiplier = 0.0;  ///< y = mean_i d_i f
};

LagrangeResidual lagrange_residual(Objective obj, const ArcProfile& p);

struct MinimizeOptions
{
    /// Converged when ||reduced gradient||_inf <= tolerance * max(1, ||gradient||_inf).
    double tolerance = 1e-9;
    std::size_t max_iterations = 100000;
    /// Every iterate keeps all theta_i above this.
    double interior_floor = 1e-8;
    double armijo = 1e-4;
};

struct OptimizationReport
{
    ArcProfile start;
    ArcProfile final;
    double objective_value = 0.0;
    std::size_t iterations = 0;
    double reduced_gradient_norm = 0.0;
    double lagrange_multiplier = 0.0;
    bool converged = false;
};

/// Reduced-coordinate gradient descent with Armijo backtracking. The last
/// angle is eliminated through theta_{n-1} = pi - sum of the others.
/// Non-convergence is reported through the flag, not thrown.
OptimizationReport minimize(Objective obj, const ArcProfile& start, const MinimizeOptions& opts = {});

/// Objective along theta(d) = target + d (regular - target) for
/// d = 1/2, 1/4, ..., 2^-steps. target[0] must be 0; the rest non-negative
/// summing to pi.
std::vector<double> boundary_probe(Objective obj, std::size_t n, std::span<const double> target,
                                   std::size_t steps = 20);

/// Uniform (Dirichlet(1)) profile, rejecting draws with any theta_i < min_angle.
std::vector<double> sample_theta(std::size_t n, std::mt19937_64& rng, double min_angle = 1e-4);

/// Deterministic stream of `count` samples, identical to what verify_sampling
/// draws for the same (n, seed).
std::vector<std::vector<double>> sample_thetas(std::size_t n, std::size_t count, std::uint64_t seed,
                                               double min_angle = 1e-4);

enum class Theorem {
    T1Lambda1Max,
    T1Lambda2Min,
    T1SumMin,
    T2Lambda1Max,
    T2SumMin,
    T2PairSumMin,
    T2ProductMin,
    T3SumMin,
    T3ProductMin,
};

struct TheoremSpec
{
    Theorem theorem;
    std::size_t n;
};

/// "T1-lambda1-max", ..., "T3-sum-min(7)". For T3 ids without a suffix the
/// default n is used. Throws UnknownTheorem.
TheoremSpec parse_theorem(std::string_view id, std::optional<std::size_t> n = std::nullopt);
std::string theorem_name(const TheoremSpec& spec);

/// Extremal value at the regular profile and whether the theorem bounds the
/// quantity from above.
struct TheoremBound
{
    double value;
    bool upper;
};
TheoremBound theorem_bound(const TheoremSpec& spec);

/// The spectral quantity the theorem constrains, via the eigensolver.
double theorem_quantity(const TheoremSpec& spec, std::span<const double> theta);

struct VerificationOptions
{
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    /// 0 picks the hardware concurrency. The report does not depend on it.
    std::size_t workers = 1;
    double tolerance = 1e-9;
    double min_angle = 1e-4;
    /// Radius (Euclidean, in theta) of the neighbourhood of the regular profile.
    double near_radius = 0.01;
};

struct VerificationReport
{
    TheoremSpec spec;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double bound = 0.0;
    bool upper = false;
    std::size_t violations = 0;
    /// Largest (upper) or smallest (lower) sampled value, and where.
    double extremal_value = 0.0;
    std::vector<double> extremal_theta;
    /// Distance from the bound on the defended side: negative means violated.
    double gap = 0.0;
    std::size_t near_regular_count = 0;
    /// Best value (closest to the extremum) among samples near the regular profile.
    std::optional<double> near_regular_best;
};

VerificationReport verify_sampling(const TheoremSpec& spec, const VerificationOptions& opts = {});

}  // namespace cotlap
