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
#include <cotlap/extremum.hpp>
#include <cotlap/spectrum.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

namespace cotlap {

namespace {

constexpr std::size_t kSampleBlock = 1024;
constexpr std::size_t kDefaultPolygonN = 5;

std::vector<double> cots(std::span<const double> theta)
{
    std::vector<double> a(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) a[i] = cot(theta[i]);
    return a;
}

void check_arity(Objective obj, std::size_t n)
{
    if (n < 3) throw Error(ErrorCode::ArityMismatch, "objectives need n >= 3");
    if (obj == Objective::GQuad && n != 4) {
        throw Error(ErrorCode::ArityMismatch, "gquad is defined for quadrilaterals only (n = 4)");
    }
}

double inf_norm(std::span<const double> v)
{
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

/// Reduced gradient d_i - d_{n-1}, i < n-1.
std::vector<double> reduce(std::span<const double> g)
{
    std::vector<double> r(g.size() - 1);
    for (std::size_t i = 0; i + 1 < g.size(); ++i) r[i] = g[i] - g.back();
    return r;
}

std::mt19937_64 block_rng(std::uint64_t seed, std::uint64_t block)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    return std::mt19937_64(seq);
}

std::string lower(std::string_view s)
{
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

std::string_view objective_name(Objective obj) noexcept
{
    switch (obj) {
    case Objective::SumCot: return "sumcot";
    case Objective::GQuad: return "gquad";
    case Objective::ESym: return "esym";
    case Objective::Lambda1: return "lambda1";
    }
    return "unknown";
}

std::optional<Objective> parse_objective(std::string_view name)
{
    const std::string s = lower(name);
    if (s == "sumcot") return Objective::SumCot;
    if (s == "gquad" || s == "g4" || s == "g") return Objective::GQuad;
    if (s == "esym") return Objective::ESym;
    if (s == "lambda1") return Objective::Lambda1;
    return std::nullopt;
}

double evaluate(Objective obj, std::span<const double> theta)
{
    check_arity(obj, theta.size());
    const std::vector<double> a = cots(theta);
    switch (obj) {
    case Objective::SumCot: return elementary_symmetric(a, 1);
    case Objective::GQuad: return quadrilateral_pair_coefficient(a);
    case Objective::ESym: return elementary_symmetric(a, static_cast<int>(a.size()) - 1);
    case Objective::Lambda1: return eigenvalues(assemble_cyclic(CotVector(a)))[1];
    }
    throw Error(ErrorCode::Internal, "unhandled objective");
}

double evaluate(Objective obj, const ArcProfile& p)
{
    return evaluate(obj, p.theta());
}

std::vector<double> gradient(Objective obj, std::span<const double> theta)
{
    check_arity(obj, theta.size());
    const std::size_t n = theta.size();
    const std::vector<double> a = cots(theta);
    std::vector<double> g(n);
    switch (obj) {
    case Objective::SumCot:
        for (std::size_t i = 0; i < n; ++i) g[i] = -(1.0 + a[i] * a[i]);
        return g;
    case Objective::GQuad:
        for (std::size_t i = 0; i < n; ++i) {
            const double dg_da = 3.0 * (a[(i + 1) % 4] + a[(i + 3) % 4]) + 4.0 * a[(i + 2) % 4];
            g[i] = -(1.0 + a[i] * a[i]) * dg_da;
        }
        return g;
    case Objective::ESym: {
        std::vector<double> rest(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0, k = 0; j < n; ++j)
                if (j != i) rest[k++] = a[j];
            g[i] = -(1.0 + a[i] * a[i]) * elementary_symmetric(rest, static_cast<int>(n) - 2);
        }
        return g;
    }
    case Objective::Lambda1:
        throw Error(ErrorCode::Unsupported, "lambda1 is not differentiable at eigenvalue crossings");
    }
    throw Error(ErrorCode::Internal, "unhandled objective");
}

std::vector<double> gradient(Objective obj, const ArcProfile& p)
{
    return gradient(obj, p.theta());
}

LagrangeResidual lagrange_residual(Objective obj, const ArcProfile& p)
{
    const std::vector<double> g = gradient(obj, p);
    LagrangeResidual out;
    out.multiplier = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(g.size());
    for (double gi : g) out.residual = std::max(out.residual, std::abs(gi - out.multiplier));
    return out;
}

OptimizationReport minimize(Objective obj, const ArcProfile& start, const MinimizeOptions& opts)
{
    const std::size_t n = start.size();
    check_arity(obj, n);
    if (obj == Objective::Lambda1) {
        throw Error(ErrorCode::Unsupported, "lambda1 is verified by sampling, not optimized");
    }
    for (double t : start.theta()) {
        if (t <= opts.interior_floor) {
            throw Error(ErrorCode::StartNotInterior, "start profile touches the interior floor");
        }
    }

    // Free coordinates are theta[0..n-2]; theta[n-1] closes the sum.
    std::vector<double> theta(start.theta().begin(), start.theta().end());
    std::vector<double> trial(n);
    const auto close = [n](std::vector<double>& t) {
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) s += t[i];
        t[n - 1] = kPi - s;
    };
    close(theta);

    double f = evaluate(obj, theta);
    std::vector<double> g = gradient(obj, theta);
    std::vector<double> r = reduce(g);
    std::vector<double> d(n);
    const double noise = 64.0 * std::numeric_limits<double>::epsilon();

    double step = 1.0 / std::max(1.0, inf_norm(r));
    std::size_t iter = 0;
    bool converged = false;
    for (;;) {
        if (inf_norm(r) <= opts.tolerance * std::max(1.0, inf_norm(g))) {
            converged = true;
            break;
        }
        if (iter == opts.max_iterations) break;
        ++iter;

        // Descent direction in full coordinates: d_i = -r_i, d_{n-1} = sum r_i.
        double r2 = 0.0;
        double last = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            d[i] = -r[i];
            last += r[i];
            r2 += r[i] * r[i];
        }
        d[n - 1] = last;

        double cap = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i)
            if (d[i] < 0.0) cap = std::min(cap, (theta[i] - opts.interior_floor) / -d[i]);
        double t = std::min(2.0 * step, 0.999 * cap);

        bool accepted = false;
        std::vector<double> g_trial;
        double f_trial = 0.0;
        while (t > 0.0 && t * std::sqrt(r2) > 1e-300) {
            for (std::size_t i = 0; i + 1 < n; ++i) trial[i] = theta[i] + t * d[i];
            close(trial);
            f_trial = evaluate(obj, trial);
            const double predicted = opts.armijo * t * r2;
            if (!std::isfinite(f_trial)) {
                accepted = false;
            } else if (predicted < noise * std::max(1.0, std::abs(f))) {
                // The sufficient decrease is below the rounding floor of f.
                // Estimate the change from directional derivatives instead
                // (trapezoid rule, exact for quadratics): phi'(0) = -r2.
                g_trial = gradient(obj, trial);
                double slope = 0.0;
                for (std::size_t i = 0; i < n; ++i) slope += g_trial[i] * d[i];
                accepted = 0.5 * t * (slope - r2) <= -predicted;
            } else {
                accepted = f_trial <= f - predicted;
            }
            if (accepted) break;
            g_trial.clear();
            t *= 0.5;
        }
        if (!accepted) break;

        step = t;
        theta.swap(trial);
        f = f_trial;
        g = g_trial.empty() ? gradient(obj, theta) : std::move(g_trial);
        r = reduce(g);
    }

    const double y = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(n);
    return OptimizationReport{start, make_arc_profile(theta), f, iter, inf_norm(r), y, converged};
}

std::vector<double> boundary_probe(Objective obj, std::size_t n, std::span<const double> target,
                                   std::size_t steps)
{
    check_arity(obj, n);
    if (target.size() != n) {
        throw Error(ErrorCode::InvalidTarget, "target has " + std::to_string(target.size()) +
                                                  " entries, expected " + std::to_string(n));
    }
    if (steps == 0 || steps > 60) throw Error(ErrorCode::InvalidTarget, "steps must be in [1, 60]");
    if (target[0] != 0.0) throw Error(ErrorCode::InvalidTarget, "target must have theta_0 = 0");
    double sum = 0.0;
    for (double s : target) {
        if (!(s >= 0.0) || s > kPi) throw Error(ErrorCode::InvalidTarget, "target entries must lie in [0, pi]");
        sum += s;
    }
    if (std::abs(sum - kPi) > kArcSumTolerance) throw Error(ErrorCode::InvalidTarget, "target must sum to pi");

    const double regular = kPi / static_cast<double>(n);
    std::vector<double> values;
    values.reserve(steps);
    std::vector<double> theta(n);
    double dist = 1.0;
    for (std::size_t k = 0; k < steps; ++k) {
        dist *= 0.5;
        for (std::size_t i = 0; i < n; ++i) theta[i] = target[i] + dist * (regular - target[i]);
        values.push_back(evaluate(obj, theta));
    }
    return values;
}

std::vector<double> sample_theta(std::size_t n, std::mt19937_64& rng, double min_angle)
{
    if (n < 3) throw Error(ErrorCode::TooFewArcs, "need n >= 3");
    if (!(min_angle >= 0.0) || min_angle * static_cast<double>(n) >= kPi) {
        throw Error(ErrorCode::InvalidArgument, "min_angle leaves no room in the simplex");
    }
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> x(n);
    for (;;) {
        double s = 0.0;
        for (double& xi : x) {
            xi = expo(rng);
            s += xi;
        }
        bool ok = s > 0.0;
        for (double& xi : x) {
            xi = kPi * xi / s;
            ok = ok && xi >= min_angle;
        }
        if (ok) return x;
    }
}

std::vector<std::vector<double>> sample_thetas(std::size_t n, std::size_t count, std::uint64_t seed,
                                               double min_angle)
{
    std::vector<std::vector<double>> out;
    out.reserve(count);
    for (std::size_t block = 0; out.size() < count; ++block) {
        auto rng = block_rng(seed, block);
        for (std::size_t i = 0; i < kSampleBlock && out.size() < count; ++i)
            out.push_back(sample_theta(n, rng, min_angle));
    }
    return out;
}

namespace {

struct TheoremEntry
{
    Theorem theorem;
    std::string_view name;
    std::size_t n;  // 0: polygon size is a parameter
};

constexpr TheoremEntry kTheorems[] = {
    {Theorem::T1Lambda1Max, "T1-lambda1-max", 3}, {Theorem::T1Lambda2Min, "T1-lambda2-min", 3},
    {Theorem::T1SumMin, "T1-sum-min", 3},         {Theorem::T2Lambda1Max, "T2-lambda1-max", 4},
    {Theorem::T2SumMin, "T2-sum-min", 4},         {Theorem::T2PairSumMin, "T2-pairsum-min", 4},
    {Theorem::T2ProductMin, "T2-product-min", 4}, {Theorem::T3SumMin, "T3-sum-min", 0},
    {Theorem::T3ProductMin, "T3-product-min", 0},
};

}  // namespace

TheoremSpec parse_theorem(std::string_view id, std::optional<std::size_t> n)
{
    std::string_view base = id;
    std::optional<std::size_t> suffix_n;
    if (const auto open = id.find('('); open != std::string_view::npos) {
        if (id.back() != ')') throw Error(ErrorCode::UnknownTheorem, "malformed theorem id '" + std::string(id) + "'");
        base = id.substr(0, open);
        const std::string_view digits = id.substr(open + 1, id.size() - open - 2);
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
            throw Error(ErrorCode::UnknownTheorem, "malformed theorem id '" + std::string(id) + "'");
        }
        suffix_n = value;
    }
    const std::string key = lower(base);
    for (const auto& entry : kTheorems) {
        if (lower(entry.name) != key) continue;
        if (entry.n != 0) {
            const std::size_t given = suffix_n.value_or(n.value_or(entry.n));
            if (given != entry.n) {
                throw Error(ErrorCode::ArityMismatch,
                            std::string(entry.name) + " is stated for n = " + std::to_string(entry.n));
            }
            return {entry.theorem, entry.n};
        }
        if (suffix_n && n && *suffix_n != *n) {
            throw Error(ErrorCode::ArityMismatch, "conflicting polygon sizes in theorem id and n");
        }
        const std::size_t size = suffix_n.value_or(n.value_or(kDefaultPolygonN));
        if (size < 3) throw Error(ErrorCode::TooFewArcs, "polygon theorems need n >= 3");
        return {entry.theorem, size};
    }
    throw Error(ErrorCode::UnknownTheorem, "unknown theorem id '" + std::string(id) + "'");
}

std::string theorem_name(const TheoremSpec& spec)
{
    for (const auto& entry : kTheorems) {
        if (entry.theorem != spec.theorem) continue;
        std::string name(entry.name);
        if (entry.n == 0) name += "(" + std::to_string(spec.n) + ")";
        return name;
    }
    return "unknown";
}

TheoremBound theorem_bound(const TheoremSpec& spec)
{
    const double sqrt3 = std::sqrt(3.0);
    const auto n = static_cast<double>(spec.n);
    switch (spec.theorem) {
    case Theorem::T1Lambda1Max: return {sqrt3, true};
    case Theorem::T1Lambda2Min: return {sqrt3, false};
    case Theorem::T1SumMin: return {2.0 * sqrt3, false};
    case Theorem::T2Lambda1Max: return {2.0, true};
    case Theorem::T2SumMin: return {8.0, false};
    case Theorem::T2PairSumMin: return {20.0, false};
    case Theorem::T2ProductMin: return {16.0, false};
    case Theorem::T3SumMin: return {2.0 * n * cot(kPi / n), false};
    case Theorem::T3ProductMin: return {n * n * std::pow(cot(kPi / n), n - 1.0), false};
    }
    throw Error(ErrorCode::Internal, "unhandled theorem");
}

double theorem_quantity(const TheoremSpec& spec, std::span<const double> theta)
{
    if (theta.size() != spec.n) throw Error(ErrorCode::ArityMismatch, "profile size does not match theorem");
    const Spectrum s = eigenvalues(assemble_cyclic(CotVector(cots(theta))));
    switch (spec.theorem) {
    case Theorem::T1Lambda1Max:
    case Theorem::T2Lambda1Max: return s[1];
    case Theorem::T1Lambda2Min: return s[2];
    case Theorem::T1SumMin:
    case Theorem::T2SumMin:
    case Theorem::T3SumMin: return sum_nontrivial(s);
    case Theorem::T2PairSumMin: return pair_sum_nontrivial(s);
    case Theorem::T2ProductMin:
    case Theorem::T3ProductMin: return product_nontrivial(s);
    }
    throw Error(ErrorCode::Internal, "unhandled theorem");
}

namespace {

struct BlockResult
{
    std::size_t count = 0;
    std::size_t violations = 0;
    double extremal = 0.0;
    std::vector<double> extremal_theta;
    std::size_t near_count = 0;
    std::optional<double> near_best;
};

}  // namespace

VerificationReport verify_sampling(const TheoremSpec& spec, const VerificationOptions& opts)
{
    const TheoremBound bound = theorem_bound(spec);
    const std::size_t n = spec.n;
    const double regular = kPi / static_cast<double>(n);
    const auto better = [&](double x, double y) { return bound.upper ? x > y : x < y; };

    const std::size_t blocks = (opts.samples + kSampleBlock - 1) / kSampleBlock;
    std::vector<BlockResult> results(blocks);

    const auto run_block = [&](std::size_t b) {
        auto rng = block_rng(opts.seed, b);
        const std::size_t count = std::min(kSampleBlock, opts.samples - b * kSampleBlock);
        BlockResult res;
        res.count = count;
        for (std::size_t i = 0; i < count; ++i) {
            const std::vector<double> theta = sample_theta(n, rng, opts.min_angle);
            const double v = theorem_quantity(spec, theta);
            const double excess = bound.upper ? v - bound.value : bound.value - v;
            if (!(excess <= opts.tolerance)) ++res.violations;
            if (i == 0 || better(v, res.extremal)) {
                res.extremal = v;
                res.extremal_theta = theta;
            }
            double dist2 = 0.0;
            for (double t : theta) dist2 += (t - regular) * (t - regular);
            if (dist2 <= opts.near_radius * opts.near_radius) {
                ++res.near_count;
                if (!res.near_best || better(v, *res.near_best)) res.near_best = v;
            }
        }
        results[b] = std::move(res);
    };

    std::size_t workers = opts.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.workers;
    workers = std::min(workers, std::max<std::size_t>(blocks, 1));
    if (workers <= 1) {
        for (std::size_t b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t b; (b = next.fetch_add(1)) < blocks;) run_block(b);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    VerificationReport report;
    report.spec = spec;
    report.samples = opts.samples;
    report.seed = opts.seed;
    report.bound = bound.value;
    report.upper = bound.upper;
    bool first = true;
    for (auto& res : results) {
        report.violations += res.violations;
        if (res.count > 0 && (first || better(res.extremal, report.extremal_value))) {
            report.extremal_value = res.extremal;
            report.extremal_theta = std::move(res.extremal_theta);
            first = false;
        }
        report.near_regular_count += res.near_count;
        if (res.near_best && (!report.near_regular_best || better(*res.near_best, *report.near_regular_best)))
            report.near_regular_best = res.near_best;
    }
    if (!first) {
        report.gap = bound.upper ? bound.value - report.extremal_value : report.extremal_value - bound.value;
    }
    return report;
}

}  // namespace cotlap
