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
#include "oracles.hpp"
#include "support.hpp"

#include <cotlap/extremum.hpp>
#include <cotlap/spectrum.hpp>

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace cotlap;
using oracle::pi;

namespace {

const double kSqrt3 = std::sqrt(3.0);

double cot_pow(std::size_t n, double p)
{
    return std::pow(std::cos(pi / n) / std::sin(pi / n), p);
}

/// Minimizes from `starts` random interior profiles and checks every run
/// lands on the regular polygon.
void check_multistart(Objective obj, std::size_t n, int starts, std::uint64_t seed, double expected)
{
    std::mt19937_64 rng(seed);
    for (int s = 0; s < starts; ++s) {
        const ArcProfile start = make_arc_profile(oracle::random_profile(rng, n, 1e-2));
        const OptimizationReport rep = minimize(obj, start, {});
        INFO("n = " << n << ", start " << s);
        REQUIRE(rep.converged);
        for (double t : rep.final.theta()) REQUIRE(std::abs(t - pi / n) <= 1e-6);
        REQUIRE(oracle::rel_err_strict(rep.objective_value, expected) <= 1e-8);
        REQUIRE(rep.reduced_gradient_norm <= 1e-9 * std::max(1.0, std::abs(rep.lagrange_multiplier) * 2));
    }
}

}  // namespace

TEST_CASE("objective names")
{
    CHECK(parse_objective("sumcot") == Objective::SumCot);
    CHECK(parse_objective("G4") == Objective::GQuad);
    CHECK(parse_objective("gquad") == Objective::GQuad);
    CHECK(parse_objective("esym") == Objective::ESym);
    CHECK(parse_objective("lambda1") == Objective::Lambda1);
    CHECK_FALSE(parse_objective("volume").has_value());
    CHECK(objective_name(Objective::ESym) == "esym");
}

TEST_CASE("evaluate examples")
{
    CHECK(evaluate(Objective::SumCot, regular_profile(3)) == doctest::Approx(kSqrt3).epsilon(1e-15));
    CHECK(evaluate(Objective::GQuad, regular_profile(4)) == doctest::Approx(20.0).epsilon(1e-14));
    CHECK(evaluate(Objective::SumCot, regular_profile(4)) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(evaluate(Objective::Lambda1, regular_profile(3)) == doctest::Approx(kSqrt3).epsilon(1e-12));
    CHECK(evaluate(Objective::Lambda1, regular_profile(4)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(evaluate(Objective::ESym, regular_profile(6)) == doctest::Approx(6 * cot_pow(6, 5)).epsilon(1e-13));
    CHECK_ERROR(evaluate(Objective::GQuad, regular_profile(5)), ErrorCode::ArityMismatch);
    CHECK_ERROR(evaluate(Objective::GQuad, regular_profile(3)), ErrorCode::ArityMismatch);
}

TEST_CASE("objectives agree with spectral quantities")
{
    std::mt19937_64 rng(41);
    for (int s = 0; s < 3000; ++s) {
        const std::size_t n = 3 + s % 8;
        const ArcProfile p = make_arc_profile(oracle::random_profile(rng, n, 1e-3));
        const CotVector a = cot_vector(p);
        const Spectrum sp = eigenvalues(assemble_cyclic(a));
        const double sum = evaluate(Objective::SumCot, p);
        const double esym = evaluate(Objective::ESym, p);
        REQUIRE(sum > 0.0);
        REQUIRE(esym > 0.0);
        REQUIRE(std::abs(sum - 0.5 * sum_nontrivial(sp)) <= 1e-9 * sp.values.back());
        REQUIRE(oracle::rel_err_strict(esym, continuant_det(a)) <= 1e-10);
        REQUIRE(evaluate(Objective::Lambda1, p) == sp[1]);
    }
}

TEST_CASE("gradient examples")
{
    for (double v : gradient(Objective::SumCot, regular_profile(3))) CHECK(v == doctest::Approx(-4.0 / 3).epsilon(1e-15));
    for (double v : gradient(Objective::GQuad, regular_profile(4))) CHECK(v == doctest::Approx(-20.0).epsilon(1e-14));
    CHECK_ERROR(gradient(Objective::Lambda1, regular_profile(3)), ErrorCode::Unsupported);
    CHECK_ERROR(gradient(Objective::GQuad, regular_profile(6)), ErrorCode::ArityMismatch);
}

TEST_CASE("analytic gradients match central differences")
{
    // h = 1e-6 differences carry truncation error ~ (h / theta)^2, so the
    // profiles keep every arc above 1e-2.
    struct Case
    {
        Objective obj;
        std::size_t lo, hi;
    };
    std::mt19937_64 rng(42);
    for (const Case c : {Case{Objective::SumCot, 3, 10}, Case{Objective::GQuad, 4, 4}, Case{Objective::ESym, 3, 10}}) {
        for (int s = 0; s < 1000; ++s) {
            const std::size_t n = c.lo + s % (c.hi - c.lo + 1);
            const auto th = oracle::random_profile(rng, n, 1e-2);
            const auto g = gradient(c.obj, make_arc_profile(th));
            const auto fd = oracle::central_difference(
                [&](const std::vector<double>& x) { return evaluate(c.obj, std::span<const double>(x)); }, th);
            for (std::size_t i = 0; i < n; ++i) REQUIRE(oracle::rel_err(g[i], fd[i]) <= 1e-6);
        }
    }
}

TEST_CASE("lagrange_residual")
{
    for (std::size_t n = 3; n <= 10; ++n) {
        const LagrangeResidual r = lagrange_residual(Objective::SumCot, regular_profile(n));
        CHECK(r.residual < 1e-12);
        CHECK(r.multiplier == doctest::Approx(-(1 + cot_pow(n, 2))).epsilon(1e-14));
    }
    CHECK(lagrange_residual(Objective::GQuad, regular_profile(4)).residual < 1e-12);
    CHECK(lagrange_residual(Objective::ESym, regular_profile(7)).residual < 1e-9);

    const LagrangeResidual off =
        lagrange_residual(Objective::SumCot, make_arc_profile(std::vector<double>{pi / 2, pi / 4, pi / 4}));
    CHECK(off.multiplier == doctest::Approx(-5.0 / 3).epsilon(1e-14));
    CHECK(off.residual == doctest::Approx(2.0 / 3).epsilon(1e-14));
}

TEST_CASE("minimize examples")
{
    check_multistart(Objective::SumCot, 5, 100, 51, 5 * cot_pow(5, 1));
    check_multistart(Objective::ESym, 6, 100, 52, 6 * cot_pow(6, 5));
    check_multistart(Objective::GQuad, 4, 100, 53, 20.0);
}

TEST_CASE("minimize finds only the regular critical point")
{
    for (std::size_t n = 3; n <= 10; ++n) check_multistart(Objective::SumCot, n, 100, 60 + n, n * cot_pow(n, 1));
    for (std::size_t n = 4; n <= 10; ++n) check_multistart(Objective::ESym, n, 100, 70 + n, n * cot_pow(n, n - 1.0));
}

TEST_CASE("minimize reports")
{
    const ArcProfile start = make_arc_profile(std::vector<double>{0.2, 0.9, pi - 1.1});
    const OptimizationReport rep = minimize(Objective::SumCot, start);
    CHECK(rep.start.theta()[0] == 0.2);
    CHECK(rep.iterations > 0);
    CHECK(rep.lagrange_multiplier == doctest::Approx(-4.0 / 3).epsilon(1e-8));

    MinimizeOptions tight;
    tight.max_iterations = 3;
    const OptimizationReport early = minimize(Objective::SumCot, start, tight);
    CHECK_FALSE(early.converged);
    CHECK(early.iterations == 3);
    CHECK(early.objective_value < evaluate(Objective::SumCot, start));

    CHECK_ERROR(minimize(Objective::Lambda1, regular_profile(4)), ErrorCode::Unsupported);
    CHECK_ERROR(minimize(Objective::GQuad, regular_profile(5)), ErrorCode::ArityMismatch);
    CHECK_ERROR(minimize(Objective::SumCot, make_arc_profile(std::vector<double>{1e-9, 1.0, pi - 1.0 - 1e-9})),
                ErrorCode::StartNotInterior);
}

TEST_CASE("boundary_probe diverges")
{
    const auto sum = boundary_probe(Objective::SumCot, 3, std::vector<double>{0, pi / 2, pi / 2}, 20);
    REQUIRE(sum.size() == 20);
    for (std::size_t k = 10; k < sum.size(); ++k) CHECK(sum[k] > sum[k - 1]);
    CHECK(sum.back() > 1e3 * kSqrt3);

    const auto g = boundary_probe(Objective::GQuad, 4, std::vector<double>{0, pi / 3, pi / 3, pi / 3}, 20);
    CHECK(g.back() > 1e3 * 20);

    const auto e = boundary_probe(Objective::ESym, 5, std::vector<double>{0, pi / 4, pi / 4, pi / 4, pi / 4}, 20);
    for (std::size_t k = 10; k < e.size(); ++k) CHECK(e[k] > e[k - 1]);
    CHECK(e.back() > 1e3 * 5 * cot_pow(5, 4));
}

TEST_CASE("boundary_probe validates its target")
{
    const std::vector<double> ok{0, pi / 2, pi / 2};
    CHECK_ERROR(boundary_probe(Objective::SumCot, 3, std::vector<double>{0.1, pi / 2, pi / 2 - 0.1}),
                ErrorCode::InvalidTarget);
    CHECK_ERROR(boundary_probe(Objective::SumCot, 3, std::vector<double>{0, 2.0, 1.0}), ErrorCode::InvalidTarget);
    CHECK_ERROR(boundary_probe(Objective::SumCot, 3, std::vector<double>{0, pi + 1, -1}), ErrorCode::InvalidTarget);
    CHECK_ERROR(boundary_probe(Objective::SumCot, 4, ok), ErrorCode::InvalidTarget);
    CHECK_ERROR(boundary_probe(Objective::SumCot, 3, ok, 0), ErrorCode::InvalidTarget);
    CHECK_ERROR(boundary_probe(Objective::SumCot, 3, ok, 61), ErrorCode::InvalidTarget);
    CHECK_ERROR(boundary_probe(Objective::GQuad, 3, ok), ErrorCode::ArityMismatch);
}

TEST_CASE("samplers are uniform-looking, bounded and reproducible")
{
    const auto a = sample_thetas(5, 3000, 9);
    const auto b = sample_thetas(5, 3000, 9);
    CHECK(a == b);
    CHECK(sample_thetas(5, 10, 10) != sample_thetas(5, 10, 9));
    double mean0 = 0.0;
    for (const auto& t : a) {
        double sum = 0.0;
        for (double x : t) {
            CHECK(x >= 1e-4);
            sum += x;
        }
        CHECK(std::abs(sum - pi) <= 1e-12);
        mean0 += t[0];
    }
    mean0 /= a.size();
    CHECK(std::abs(mean0 - pi / 5) < 0.03);

    std::mt19937_64 rng(3);
    CHECK(sample_theta(4, rng).size() == 4);
    CHECK_ERROR(sample_theta(2, rng), ErrorCode::TooFewArcs);
    CHECK_ERROR(sample_theta(4, rng, 1.0), ErrorCode::InvalidArgument);
}

TEST_CASE("theorem ids")
{
    CHECK(parse_theorem("T1-lambda1-max").n == 3);
    CHECK(parse_theorem("T2-pairsum-min").theorem == Theorem::T2PairSumMin);
    CHECK(parse_theorem("T3-sum-min(7)").n == 7);
    CHECK(parse_theorem("T3-product-min").n == 5);
    CHECK(parse_theorem("T3-product-min", 9).n == 9);
    CHECK(theorem_name(parse_theorem("t3-sum-min(7)")) == "T3-sum-min(7)");
    CHECK_ERROR(parse_theorem("bogus-id"), ErrorCode::UnknownTheorem);
    CHECK_ERROR(parse_theorem("T3-sum-min(x)"), ErrorCode::UnknownTheorem);
    CHECK_ERROR(parse_theorem("T1-sum-min", 4), ErrorCode::ArityMismatch);
    CHECK_ERROR(parse_theorem("T3-sum-min(7)", 6), ErrorCode::ArityMismatch);
    CHECK_ERROR(parse_theorem("T3-sum-min(2)"), ErrorCode::TooFewArcs);

    CHECK(theorem_bound(parse_theorem("T3-sum-min(7)")).value == doctest::Approx(29.071299552012712).epsilon(1e-14));
    CHECK(theorem_bound(parse_theorem("T3-product-min(6)")).value ==
          doctest::Approx(6 * 93.53074360871937).epsilon(1e-13));
    CHECK(theorem_bound(parse_theorem("T1-lambda1-max")).upper);
    CHECK_FALSE(theorem_bound(parse_theorem("T2-product-min")).upper);
}

TEST_CASE("every theorem survives sampling")
{
    const char* ids[] = {"T1-lambda1-max", "T1-lambda2-min", "T1-sum-min",   "T2-lambda1-max",  "T2-sum-min",
                         "T2-pairsum-min", "T2-product-min", "T3-sum-min(7)", "T3-product-min(6)"};
    for (const char* id : ids) {
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            VerificationOptions opts;
            opts.seed = seed;
            opts.workers = 0;
            const VerificationReport r = verify_sampling(parse_theorem(id), opts);
            INFO(id << " seed " << seed << " extremal " << r.extremal_value);
            CHECK(r.samples == 100000);
            CHECK(r.violations == 0);
            CHECK(r.gap >= -1e-9);
            CHECK(r.extremal_theta.size() == r.spec.n);
        }
    }
}

TEST_CASE("verification does not depend on the worker count")
{
    VerificationOptions opts;
    opts.samples = 20000;
    opts.seed = 5;
    opts.workers = 1;
    const VerificationReport one = verify_sampling(parse_theorem("T2-lambda1-max"), opts);
    opts.workers = 7;
    const VerificationReport many = verify_sampling(parse_theorem("T2-lambda1-max"), opts);
    CHECK(one.extremal_value == many.extremal_value);
    CHECK(one.extremal_theta == many.extremal_theta);
    CHECK(one.near_regular_count == many.near_regular_count);
    CHECK(one.near_regular_best == many.near_regular_best);

    // The sampler stream is the one verification consumes.
    const auto draws = sample_thetas(4, 20000, 5);
    double best = 0.0;
    for (const auto& t : draws) best = std::max(best, theorem_quantity(parse_theorem("T2-lambda1-max"), t));
    CHECK(best == one.extremal_value);
}

TEST_CASE("quadrilateral pair sums")
{
    std::mt19937_64 rng(43);
    for (int s = 0; s < 10000; ++s) {
        const CotVector a = cot_vector(make_arc_profile(oracle::random_profile(rng, 4, 1e-4)));
        const Spectrum sp = eigenvalues(assemble_cyclic(a));
        const double pair = pair_sum_nontrivial(sp);
        const double coeff = charpoly4(a).coeffs[2];
        REQUIRE(oracle::rel_err_strict(pair, coeff) <= 1e-8);
        REQUIRE(quadrilateral_pair_coefficient(a.values()) == coeff);
        REQUIRE(pair >= 20.0 - 1e-9);
    }
}

TEST_CASE("cotangent triples from a polygon have e2 > 1")
{
    std::mt19937_64 rng(44);
    int checked = 0;
    while (checked < 10000) {
        const std::size_t n = 4 + rng() % 7;
        const auto th = oracle::random_profile(rng, n, 1e-4);
        std::size_t idx[3] = {rng() % n, rng() % n, rng() % n};
        if (idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2]) continue;
        if (th[idx[0]] + th[idx[1]] + th[idx[2]] >= pi) continue;
        const std::vector<double> a{cot(th[idx[0]]), cot(th[idx[1]]), cot(th[idx[2]])};
        REQUIRE(elementary_symmetric(a, 2) > 1.0);
        ++checked;
    }
}
