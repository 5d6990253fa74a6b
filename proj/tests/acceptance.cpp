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
// Acceptance suite: one PASS/FAIL line per criterion, with timings. Runtime
// limits are part of each criterion. `--criterion N` runs a single one.

#include "oracles.hpp"

#include <cotlap/cotlap.h>
#include <cotlap/cyclic.hpp>
#include <cotlap/extremum.hpp>
#include <cotlap/mesh.hpp>
#include <cotlap/spectrum.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace cotlap;

constexpr double pi = std::numbers::pi;
const double sqrt3 = std::sqrt(3.0);

struct Outcome
{
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        pass = pass && ok;
        if (!detail.empty()) detail += "; ";
        detail += what + (ok ? "" : " [FAIL]");
    }
};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

struct Criterion
{
    int id;
    const char* title;
    double limit_ms;
    std::function<Outcome()> run;
};

double product_of_spectrum(const CotVector& a)
{
    return product_nontrivial(eigenvalues(assemble_cyclic(a)));
}

// 1. Square spectrum through the C interface the CLI uses.
Outcome square_spectrum()
{
    Outcome o;
    cotlap_profile* p = nullptr;
    cotlap_matrix* m = nullptr;
    std::vector<double> ev(4);
    cotlap_spectrum_summary s{};
    const bool ok = cotlap_profile_regular(4, &p) == COTLAP_OK && cotlap_cyclic_laplacian(p, &m) == COTLAP_OK &&
                    cotlap_matrix_spectrum(m, ev.data(), ev.size(), &s) == COTLAP_OK;
    cotlap_matrix_destroy(m);
    cotlap_profile_destroy(p);
    o.require(ok, "C API calls succeed");
    const double want[] = {0, 2, 2, 4};
    double err = 0.0;
    for (int i = 0; i < 4; ++i) err = std::max(err, std::abs(ev[i] - want[i]));
    o.require(err <= 1e-9, "max |lambda - {0,2,2,4}| = " + fmt(err));
    o.require(std::abs(s.sum_nontrivial - 8.0) <= 1e-9, "sum = " + fmt(s.sum_nontrivial));
    o.require(std::abs(s.product_nontrivial - 16.0) <= 1e-9, "product = " + fmt(s.product_nontrivial));
    return o;
}

// 2. Equilateral triangle and lambda1 lambda2 = 3 on random triangles.
Outcome equilateral()
{
    Outcome o;
    const Spectrum s = eigenvalues(assemble_cyclic(cot_vector(regular_profile(3))));
    const double dev = std::max(std::abs(s[1] - sqrt3), std::abs(s[2] - sqrt3));
    o.require(dev <= 1e-9, "max |lambda_i - sqrt3| = " + fmt(dev));
    const auto thetas = sample_thetas(3, 100000, 2, 1e-4);
    double worst = 0.0;
    std::size_t bad = 0;
    for (const auto& t : thetas) {
        const Spectrum st = eigenvalues(assemble_cyclic(cot_vector(make_arc_profile(t))));
        const double e = std::abs(st[1] * st[2] - 3.0);
        worst = std::max(worst, e);
        if (!(e <= 1e-12)) ++bad;
    }
    o.require(bad == 0, "|lambda1 lambda2 - 3| <= 1e-12: " + std::to_string(bad) + "/100000 exceed, worst " +
                            fmt(worst));
    return o;
}

Outcome sampled(const std::vector<TheoremSpec>& specs, std::uint64_t seed)
{
    Outcome o;
    for (const TheoremSpec& spec : specs) {
        VerificationOptions v;
        v.samples = 100000;
        v.seed = seed;
        v.workers = 0;
        const VerificationReport r = verify_sampling(spec, v);
        o.require(r.violations == 0, theorem_name(spec) + " extremal " + fmt(r.extremal_value) + " vs " +
                                         fmt(r.bound) + ", violations " + std::to_string(r.violations));
    }
    return o;
}

// 3. Theorem 1 sampling plus the near-equilateral best sample.
Outcome theorem1()
{
    Outcome o = sampled({{Theorem::T1Lambda1Max, 3}, {Theorem::T1Lambda2Min, 3}, {Theorem::T1SumMin, 3}}, 1);
    VerificationOptions v;
    v.samples = 100000;
    v.seed = 1;
    v.workers = 0;
    const VerificationReport r = verify_sampling({Theorem::T1Lambda1Max, 3}, v);
    const bool near = r.near_regular_best.has_value() && *r.near_regular_best > sqrt3 - 1e-3;
    o.require(near, std::to_string(r.near_regular_count) + " samples within 0.01 of equilateral, best lambda1 " +
                        (r.near_regular_best ? fmt(*r.near_regular_best) : std::string("none")));
    return o;
}

// 4. Theorem 2 sampling.
Outcome theorem2()
{
    return sampled({{Theorem::T2Lambda1Max, 4},
                    {Theorem::T2SumMin, 4},
                    {Theorem::T2PairSumMin, 4},
                    {Theorem::T2ProductMin, 4}},
                   1);
}

// 5. Theorem 3 multistart minimization.
Outcome theorem3()
{
    Outcome o;
    for (std::size_t n : {5u, 7u, 10u}) {
        const double c = 1.0 / std::tan(pi / static_cast<double>(n));
        for (Objective obj : {Objective::SumCot, Objective::ESym}) {
            const double want =
                obj == Objective::SumCot ? static_cast<double>(n) * c : static_cast<double>(n) * std::pow(c, n - 1);
            std::size_t failures = 0;
            double worst_dev = 0.0, worst_rel = 0.0;
            for (const auto& start : sample_thetas(n, 100, 11 + n, 1e-4)) {
                const OptimizationReport r = minimize(obj, make_arc_profile(start));
                double dev = 0.0;
                for (double t : r.final.theta()) dev = std::max(dev, std::abs(t - pi / static_cast<double>(n)));
                const double rel = oracle::rel_err_strict(r.objective_value, want);
                worst_dev = std::max(worst_dev, dev);
                worst_rel = std::max(worst_rel, rel);
                if (!r.converged || !(dev <= 1e-6) || !(rel <= 1e-8)) ++failures;
            }
            o.require(failures == 0, std::string(objective_name(obj)) + " n=" + std::to_string(n) + ": " +
                                         std::to_string(failures) + " bad, dev " + fmt(worst_dev) + ", rel " +
                                         fmt(worst_rel));
        }
    }
    return o;
}

// 6. Matrix-tree equivalence.
Outcome matrix_tree()
{
    Outcome o;
    double worst_eig = 0.0, worst_esym = 0.0;
    std::size_t bad = 0;
    for (std::size_t n = 3; n <= 12; ++n) {
        for (const auto& t : sample_thetas(n, 10000, 100 + n, 1e-4)) {
            const CotVector a = cot_vector(make_arc_profile(t));
            const double mt = matrix_tree_product(a);
            const double eig = oracle::rel_err_strict(product_of_spectrum(a), mt);
            const double es = oracle::rel_err_strict(continuant_det(a), elementary_symmetric(a, static_cast<int>(n) - 1));
            worst_eig = std::max(worst_eig, eig);
            worst_esym = std::max(worst_esym, es);
            if (!(eig <= 1e-8) || !(es <= 1e-10)) ++bad;
        }
    }
    o.require(worst_eig <= 1e-8, "eigen product vs n det N rel " + fmt(worst_eig));
    o.require(worst_esym <= 1e-10, "det N vs e_{n-1} rel " + fmt(worst_esym));
    o.require(bad == 0, std::to_string(bad) + "/100000 profiles out of tolerance");
    return o;
}

// 7. Triangulation independence.
Outcome independence()
{
    Outcome o;
    std::size_t bad = 0;
    double worst_l = 0.0, worst_w = 0.0;
    for (std::size_t i = 0; i < 1000; ++i) {
        const std::size_t n = 4 + i % 7;
        const auto t = sample_thetas(n, 1, 7000 + i, 1e-4).front();
        const IndependenceReport r = check_triangulation_independence(make_arc_profile(t));
        worst_l = std::max(worst_l, r.max_laplacian_difference);
        worst_w = std::max(worst_w, r.max_diagonal_weight);
        if (!(r.max_laplacian_difference <= 1e-10) || !(r.max_diagonal_weight < 1e-10)) ++bad;
    }
    o.require(bad == 0, std::to_string(bad) + "/1000 polygons out of tolerance");
    o.require(worst_l <= 1e-10, "max fan difference " + fmt(worst_l));
    o.require(worst_w < 1e-10, "max diagonal weight " + fmt(worst_w));
    return o;
}

// 8. Cotangent energy against per-face gradient quadrature.
Outcome dirichlet()
{
    Outcome o;
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::size_t> size(2, 6);
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const oracle::PlanarMesh pm = oracle::jittered_grid(rng, size(rng));
        std::vector<Vec2> verts;
        for (std::size_t i = 0; i < pm.xy.size(); i += 2) verts.push_back({pm.xy[i], pm.xy[i + 1]});
        std::vector<Face> faces;
        for (std::size_t i = 0; i < pm.faces.size(); i += 3) faces.push_back({pm.faces[i], pm.faces[i + 1], pm.faces[i + 2]});
        const TriMesh mesh(verts, faces);
        PLFunction f;
        for (std::size_t i = 0; i < verts.size(); ++i) f.values.push_back(value(rng));
        const double want = static_cast<double>(oracle::pl_energy(pm, f.values));
        worst = std::max(worst, oracle::rel_err_strict(dirichlet_energy(mesh, f, WeightConvention::HalfCot), want));
    }
    o.require(worst <= 1e-9, "max relative difference " + fmt(worst));
    return o;
}

// 9. Analytic against central-difference gradients. Each component steps by
// 1e-6 of its own angle so the stencil stays inside the simplex.
Outcome gradients()
{
    Outcome o;
    for (Objective obj : {Objective::SumCot, Objective::GQuad, Objective::ESym}) {
        double worst = 0.0;
        for (std::size_t i = 0; i < 1000; ++i) {
            const std::size_t n = obj == Objective::GQuad ? 4 : 3 + i % 8;
            std::vector<double> x = sample_thetas(n, 1, 9000 + i, 1e-4).front();
            const std::vector<double> g = gradient(obj, std::span<const double>(x));
            double scale = 1.0;
            for (double v : g) scale = std::max(scale, std::abs(v));
            for (std::size_t k = 0; k < n; ++k) {
                const double xk = x[k];
                const double h = 1e-6 * xk;
                x[k] = xk + h;
                const double fp = evaluate(obj, std::span<const double>(x));
                x[k] = xk - h;
                const double fm = evaluate(obj, std::span<const double>(x));
                x[k] = xk;
                const double fd = (fp - fm) / (2.0 * h);
                worst = std::max(worst, std::abs(fd - g[k]) / scale);
            }
        }
        o.require(worst <= 1e-6, std::string(objective_name(obj)) + " max relative error " + fmt(worst));
    }
    return o;
}

// 10. Boundary divergence.
Outcome divergence()
{
    Outcome o;
    struct Case
    {
        Objective obj;
        std::vector<double> target;
    };
    const std::vector<Case> cases = {{Objective::SumCot, {0.0, pi / 2, pi / 2}},
                                     {Objective::GQuad, {0.0, pi / 3, pi / 3, pi / 3}},
                                     {Objective::ESym, {0.0, pi / 4, pi / 4, pi / 4, pi / 4}}};
    for (const Case& c : cases) {
        const std::vector<double> v = boundary_probe(c.obj, c.target.size(), c.target);
        const double regular = evaluate(c.obj, regular_profile(c.target.size()));
        const double ratio = v.back() / regular;
        o.require(ratio > 1e3, std::string(objective_name(c.obj)) + " final/regular " + fmt(ratio));
    }
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"cotlap acceptance suite"};
    int only = 0;
    app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "square spectrum", 10, square_spectrum},
        {2, "equilateral triangle and lambda1 lambda2 = 3", 5000, equilateral},
        {3, "theorem 1 sampling", 10000, theorem1},
        {4, "theorem 2 sampling", 20000, theorem2},
        {5, "theorem 3 optimization", 60000, theorem3},
        {6, "matrix-tree equivalence", 60000, matrix_tree},
        {7, "triangulation independence", 10000, independence},
        {8, "Dirichlet energy oracle", 10000, dirichlet},
        {9, "gradient checks", 10000, gradients},
        {10, "boundary divergence", 1000, divergence},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.id != only) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        out.require(ms < c.limit_ms, "runtime " + fmt(ms) + " ms < " + fmt(c.limit_ms) + " ms");
        std::printf("%s criterion %d: %s (%s)\n", out.pass ? "PASS" : "FAIL", c.id, c.title, out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
