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
// cotlap command-line front end. Talks to the library through the C API only.

#include <cotlap/cotlap.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kSchemaVersion = 1;
constexpr double kPi = std::numbers::pi;
// Inline and file angles may be rounded (e.g. 7 decimals, or degrees); sums
// this close to pi are rescaled onto the simplex.
constexpr double kIngestSlack = 1e-6;

/// Reported on stderr as a structured error; exit code 2.
struct CliError
{
    std::string code;
    std::string message;
};

void check(cotlap_status s)
{
    if (s != COTLAP_OK) throw CliError{cotlap_status_name(s), cotlap_last_error()};
}

struct ProfileDeleter
{
    void operator()(cotlap_profile* p) const { cotlap_profile_destroy(p); }
};
struct MatrixDeleter
{
    void operator()(cotlap_matrix* m) const { cotlap_matrix_destroy(m); }
};
struct MeshDeleter
{
    void operator()(cotlap_mesh* m) const { cotlap_mesh_destroy(m); }
};
using Profile = std::unique_ptr<cotlap_profile, ProfileDeleter>;
using Matrix = std::unique_ptr<cotlap_matrix, MatrixDeleter>;
using Mesh = std::unique_ptr<cotlap_mesh, MeshDeleter>;

Profile make_profile(const std::vector<double>& theta)
{
    cotlap_profile* p = nullptr;
    check(cotlap_profile_create(theta.data(), theta.size(), &p));
    return Profile(p);
}

Profile make_regular(std::size_t n)
{
    cotlap_profile* p = nullptr;
    check(cotlap_profile_regular(n, &p));
    return Profile(p);
}

std::vector<double> profile_theta(const cotlap_profile* p)
{
    std::vector<double> v(cotlap_profile_size(p));
    check(cotlap_profile_theta(p, v.data(), v.size()));
    return v;
}

std::vector<double> profile_cot(const cotlap_profile* p)
{
    std::vector<double> v(cotlap_profile_size(p));
    check(cotlap_profile_cot(p, v.data(), v.size()));
    return v;
}

Matrix cyclic_laplacian(const cotlap_profile* p)
{
    cotlap_matrix* m = nullptr;
    check(cotlap_cyclic_laplacian(p, &m));
    return Matrix(m);
}

json matrix_rows(const cotlap_matrix* m)
{
    const std::size_t n = cotlap_matrix_dim(m);
    std::vector<double> e(n * n);
    check(cotlap_matrix_entries(m, e.data(), e.size()));
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) rows.push_back(std::vector<double>(e.begin() + i * n, e.begin() + (i + 1) * n));
    return rows;
}

struct SpectrumResult
{
    std::vector<double> values;
    cotlap_spectrum_summary summary{};
};

SpectrumResult spectrum_of(const cotlap_matrix* m)
{
    SpectrumResult s;
    s.values.resize(cotlap_matrix_dim(m));
    check(cotlap_matrix_spectrum(m, s.values.data(), s.values.size(), &s.summary));
    return s;
}

double esym(const std::vector<double>& a, int k)
{
    double out = 0.0;
    check(cotlap_elementary_symmetric(a.data(), a.size(), k, &out));
    return out;
}

cotlap_objective parse_objective(const std::string& name)
{
    cotlap_objective obj{};
    if (cotlap_objective_parse(name.c_str(), &obj) != COTLAP_OK)
        throw CliError{"InvalidArgument", "unknown objective '" + name + "' (sumcot, gquad/g4, esym, lambda1)"};
    return obj;
}

void emit(const json& doc)
{
    std::cout << doc.dump(2) << '\n';
}

std::string csv_number(double v)
{
    // Same shortest round-trip form the JSON writer uses.
    return json(v).dump();
}

// ---- input handling ------------------------------------------------------

struct PolygonInput
{
    std::optional<std::size_t> regular;
    std::vector<double> theta;
    std::string path;
    bool degrees = false;

    void add_to(CLI::App* cmd)
    {
        auto* r = cmd->add_option("--regular", regular, "Regular n-gon")->check(CLI::PositiveNumber);
        auto* t = cmd->add_option("--theta", theta, "Comma-separated arc half-angles")->delimiter(',');
        auto* i = cmd->add_option("--input", path, "JSON file with \"theta\" or \"theta_degrees\"");
        r->excludes(t)->excludes(i);
        t->excludes(i);
        cmd->add_flag("--degrees", degrees, "Inline angles are in degrees");
    }

    bool given() const { return regular.has_value() || !theta.empty() || !path.empty(); }
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw CliError{"InvalidArgument", "cannot open '" + path + "'"};
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw CliError{"InvalidArgument", "'" + path + "' is not valid JSON: " + e.what()};
    }
}

std::vector<double> numbers_field(const json& doc, const char* key)
{
    const json& v = doc.at(key);
    if (!v.is_array()) throw CliError{"InvalidArgument", std::string("\"") + key + "\" must be an array"};
    std::vector<double> out;
    for (const json& x : v) {
        if (!x.is_number()) throw CliError{"InvalidArgument", std::string("\"") + key + "\" must hold numbers"};
        out.push_back(x.get<double>());
    }
    return out;
}

struct Ingested
{
    std::vector<double> theta;
    bool rescaled = false;
};

/// Degree conversion and rescaling of near-pi sums.
Ingested ingest_angles(std::vector<double> theta, bool degrees)
{
    Ingested out;
    if (degrees)
        for (double& t : theta) t *= kPi / 180.0;
    double sum = 0.0;
    for (double t : theta) sum += t;
    if (std::isfinite(sum) && std::abs(sum - kPi) > 1e-9 && std::abs(sum - kPi) <= kIngestSlack) {
        for (double& t : theta) t *= kPi / sum;
        out.rescaled = true;
    }
    out.theta = std::move(theta);
    return out;
}

Ingested read_polygon(const PolygonInput& in)
{
    if (in.regular) {
        Profile p = make_regular(*in.regular);
        return {profile_theta(p.get()), false};
    }
    if (!in.theta.empty()) return ingest_angles(in.theta, in.degrees);
    if (!in.path.empty()) {
        const json doc = read_json_file(in.path);
        if (doc.is_object() && doc.contains("theta")) return ingest_angles(numbers_field(doc, "theta"), false);
        if (doc.is_object() && doc.contains("theta_degrees"))
            return ingest_angles(numbers_field(doc, "theta_degrees"), true);
        throw CliError{"InvalidArgument", "'" + in.path + "' needs a \"theta\" or \"theta_degrees\" array"};
    }
    throw CliError{"InvalidArgument", "give one of --regular, --theta, --input"};
}

// ---- spectrum ------------------------------------------------------------

struct SpectrumCmd
{
    PolygonInput input;
    std::string format = "json";
};

int run_spectrum(const SpectrumCmd& c)
{
    const Ingested in = read_polygon(c.input);
    Profile p = make_profile(in.theta);
    const std::vector<double> a = profile_cot(p.get());
    const std::size_t n = a.size();
    Matrix l = cyclic_laplacian(p.get());
    const SpectrumResult s = spectrum_of(l.get());

    if (c.format == "csv") {
        std::cout << "index,eigenvalue\n";
        for (std::size_t i = 0; i < n; ++i) std::cout << i << ',' << csv_number(s.values[i]) << '\n';
        return kExitOk;
    }

    double mt = 0.0, cont = 0.0;
    check(cotlap_matrix_tree_product(p.get(), &mt));
    check(cotlap_continuant_det(p.get(), &cont));
    const double e1 = esym(a, 1);

    json residuals;
    residuals["trace_minus_2e1"] = s.summary.trace - 2.0 * e1;
    residuals["sum_nontrivial_minus_2e1"] = s.summary.sum_nontrivial - 2.0 * e1;
    residuals["product_vs_matrix_tree_rel"] = (s.summary.product_nontrivial - mt) / mt;
    residuals["continuant_vs_esym_rel"] = (cont - esym(a, static_cast<int>(n) - 1)) / cont;
    if (n == 3) {
        residuals["e2_minus_1"] = esym(a, 2) - 1.0;
        residuals["lambda1_lambda2_minus_3"] = s.values[1] * s.values[2] - 3.0;
    }
    if (n == 4) residuals["e3_minus_e1"] = esym(a, 3) - e1;

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "spectrum";
    doc["n"] = n;
    doc["theta"] = in.theta;
    doc["input_rescaled"] = in.rescaled;
    doc["a"] = a;
    doc["matrix"] = matrix_rows(l.get());
    doc["eigenvalues"] = s.values;
    doc["trace"] = s.summary.trace;
    doc["sum_nontrivial"] = s.summary.sum_nontrivial;
    doc["product_nontrivial"] = s.summary.product_nontrivial;
    doc["pair_sum_nontrivial"] = s.summary.pair_sum_nontrivial;
    doc["continuant_det"] = cont;
    doc["matrix_tree_product"] = mt;
    doc["identity_residuals"] = residuals;
    if (n == 3 || n == 4) {
        std::vector<double> coeffs(n + 1);
        std::size_t count = 0;
        const cotlap_status st = cotlap_charpoly(p.get(), coeffs.data(), coeffs.size(), &count);
        if (st == COTLAP_OK)
            doc["charpoly"] = coeffs;
        else
            doc["charpoly_error"] = {{"code", cotlap_status_name(st)}, {"message", cotlap_last_error()}};
    }
    if (n == 3) {
        double l2 = 0.0;
        check(cotlap_lambda2_closed_form(p.get(), &l2));
        doc["lambda2_closed_form"] = l2;
        doc["lambda1_closed_form"] = 3.0 / l2;
    }
    emit(doc);
    return kExitOk;
}

// ---- mesh-spectrum -------------------------------------------------------

struct MeshCmd
{
    PolygonInput input;
    std::size_t apex = 0;
    std::string convention = "full";
    std::vector<double> values;
    std::string format = "json";
};

Mesh read_mesh(const MeshCmd& c)
{
    cotlap_mesh* m = nullptr;
    if (!c.input.path.empty()) {
        const json doc = read_json_file(c.input.path);
        if (doc.is_object() && (doc.contains("theta") || doc.contains("theta_degrees"))) {
            Profile p = make_profile(read_polygon(c.input).theta);
            check(cotlap_mesh_cyclic_fan(p.get(), c.apex, 1.0, &m));
            return Mesh(m);
        }
        if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("faces"))
            throw CliError{"InvalidArgument", "mesh file needs \"vertices\" and \"faces\""};
        std::vector<double> xy;
        std::vector<std::size_t> faces;
        try {
            for (const json& v : doc.at("vertices")) {
                if (v.size() != 2) throw CliError{"InvalidArgument", "each vertex must be [x, y]"};
                xy.push_back(v.at(0).get<double>());
                xy.push_back(v.at(1).get<double>());
            }
            for (const json& f : doc.at("faces")) {
                if (f.size() != 3) throw CliError{"InvalidArgument", "each face must be [i, j, k]"};
                for (const json& idx : f) {
                    if (!idx.is_number_unsigned()) throw CliError{"InvalidArgument", "face indices must be >= 0"};
                    faces.push_back(idx.get<std::size_t>());
                }
            }
        } catch (const json::exception& e) {
            throw CliError{"InvalidArgument", std::string("malformed mesh: ") + e.what()};
        }
        check(cotlap_mesh_create(xy.data(), xy.size() / 2, faces.data(), faces.size() / 3, &m));
        return Mesh(m);
    }
    Profile p = make_profile(read_polygon(c.input).theta);
    check(cotlap_mesh_cyclic_fan(p.get(), c.apex, 1.0, &m));
    return Mesh(m);
}

int run_mesh(const MeshCmd& c)
{
    const cotlap_convention conv = c.convention == "half" ? COTLAP_HALF_COT : COTLAP_FULL_COT;
    Mesh mesh = read_mesh(c);
    cotlap_matrix* raw = nullptr;
    check(cotlap_mesh_laplacian(mesh.get(), conv, &raw));
    Matrix l(raw);
    const SpectrumResult s = spectrum_of(l.get());

    if (c.format == "csv") {
        std::cout << "index,eigenvalue\n";
        for (std::size_t i = 0; i < s.values.size(); ++i) std::cout << i << ',' << csv_number(s.values[i]) << '\n';
        return kExitOk;
    }

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "mesh-spectrum";
    doc["convention"] = c.convention;
    doc["vertex_count"] = cotlap_mesh_vertex_count(mesh.get());
    doc["face_count"] = cotlap_mesh_face_count(mesh.get());
    doc["matrix"] = matrix_rows(l.get());
    doc["eigenvalues"] = s.values;
    doc["trace"] = s.summary.trace;
    doc["sum_nontrivial"] = s.summary.sum_nontrivial;
    doc["product_nontrivial"] = s.summary.product_nontrivial;
    if (!c.values.empty()) {
        double cotan = 0.0, quad = 0.0;
        check(cotlap_mesh_dirichlet_energy(mesh.get(), c.values.data(), c.values.size(), conv, &cotan));
        check(cotlap_mesh_quadrature_energy(mesh.get(), c.values.data(), c.values.size(), &quad));
        doc["dirichlet_energy"] = cotan;
        doc["quadrature_energy"] = quad;
    }
    emit(doc);
    return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyCmd
{
    std::string theorem;
    std::size_t n = 0;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    std::size_t workers = 0;
    double tolerance = 1e-9;
    double min_angle = 1e-4;
    double near_radius = 0.01;
};

int run_verify(const VerifyCmd& c)
{
    cotlap_verify_options o;
    cotlap_verify_options_default(&o);
    o.samples = c.samples;
    o.seed = c.seed;
    o.workers = c.workers;
    o.tolerance = c.tolerance;
    o.min_angle = c.min_angle;
    o.near_radius = c.near_radius;

    std::size_t n = 0;
    check(cotlap_theorem_size(c.theorem.c_str(), c.n, &n));
    std::vector<double> extremal(n);
    cotlap_verification v{};
    check(cotlap_verify(c.theorem.c_str(), c.n, &o, &v, extremal.data(), extremal.size()));

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "verify";
    doc["theorem"] = v.theorem;
    doc["n"] = v.n;
    doc["samples"] = v.samples;
    doc["seed"] = v.seed;
    doc["tolerance"] = c.tolerance;
    doc["min_angle"] = c.min_angle;
    doc["bound"] = v.bound;
    doc["direction"] = v.upper ? "max" : "min";
    doc["violations"] = v.violations;
    doc["extremal_value"] = v.extremal_value;
    doc["extremal_theta"] = extremal;
    doc["gap"] = v.gap;
    doc["near_regular"] = {{"radius", c.near_radius},
                           {"count", v.near_regular_count},
                           {"best", v.has_near_regular_best ? json(v.near_regular_best) : json(nullptr)}};
    doc["passed"] = v.violations == 0;
    emit(doc);
    return v.violations == 0 ? kExitOk : kExitFailed;
}

// ---- optimize ------------------------------------------------------------

struct OptimizeCmd
{
    PolygonInput input;
    std::string objective = "sumcot";
    std::size_t n = 0;
    std::size_t starts = 1;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    std::size_t max_iterations = 100000;
};

int run_optimize(const OptimizeCmd& c)
{
    const cotlap_objective obj = parse_objective(c.objective);
    std::vector<std::vector<double>> starts;
    std::size_t n = 0;
    if (c.input.given()) {
        starts.push_back(read_polygon(c.input).theta);
        n = starts.front().size();
    } else {
        if (c.n == 0) throw CliError{"InvalidArgument", "give --n with --starts, or a start profile"};
        n = c.n;
        std::vector<double> flat(n * c.starts);
        check(cotlap_sample_profiles(n, c.starts, c.seed, 1e-4, flat.data()));
        for (std::size_t s = 0; s < c.starts; ++s) starts.emplace_back(flat.begin() + s * n, flat.begin() + (s + 1) * n);
    }

    cotlap_minimize_options o;
    cotlap_minimize_options_default(&o);
    o.tolerance = c.tolerance;
    o.max_iterations = c.max_iterations;

    Profile regular = make_regular(n);
    double regular_value = 0.0;
    check(cotlap_evaluate(obj, regular.get(), &regular_value));

    json runs = json::array();
    bool all_converged = true;
    double max_dev = 0.0;
    double best = 0.0;
    for (std::size_t s = 0; s < starts.size(); ++s) {
        Profile start = make_profile(starts[s]);
        std::vector<double> fin(n);
        cotlap_optimization_summary sum{};
        const cotlap_status st = cotlap_minimize(obj, start.get(), &o, fin.data(), fin.size(), &sum);
        if (st != COTLAP_OK && st != COTLAP_ERR_NOT_CONVERGED) check(st);
        double dev = 0.0;
        for (double t : fin) dev = std::max(dev, std::abs(t - kPi / static_cast<double>(n)));
        all_converged = all_converged && sum.converged;
        max_dev = std::max(max_dev, dev);
        best = s == 0 ? sum.objective_value : std::min(best, sum.objective_value);
        runs.push_back({{"start", starts[s]},
                        {"final", fin},
                        {"objective_value", sum.objective_value},
                        {"iterations", sum.iterations},
                        {"reduced_gradient_norm", sum.reduced_gradient_norm},
                        {"lagrange_multiplier", sum.lagrange_multiplier},
                        {"converged", sum.converged != 0},
                        {"max_deviation_from_regular", dev}});
    }

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "optimize";
    doc["objective"] = cotlap_objective_name(obj);
    doc["n"] = n;
    doc["seed"] = c.seed;
    doc["tolerance"] = c.tolerance;
    doc["regular_value"] = regular_value;
    doc["best_value"] = best;
    doc["all_converged"] = all_converged;
    doc["max_deviation_from_regular"] = max_dev;
    doc["runs"] = runs;
    emit(doc);
    return all_converged ? kExitOk : kExitFailed;
}

// ---- probe ---------------------------------------------------------------

struct ProbeCmd
{
    std::string objective = "sumcot";
    std::vector<double> target;
    bool degrees = false;
    std::size_t steps = 20;
    std::string format = "json";
};

int run_probe(const ProbeCmd& c)
{
    const cotlap_objective obj = parse_objective(c.objective);
    const std::vector<double> target = ingest_angles(c.target, c.degrees).theta;
    const std::size_t n = target.size();
    std::vector<double> values(c.steps);
    check(cotlap_boundary_probe(obj, n, target.data(), c.steps, values.data()));
    Profile regular = make_regular(n);
    double regular_value = 0.0;
    check(cotlap_evaluate(obj, regular.get(), &regular_value));

    std::vector<double> dist(c.steps);
    double d = 1.0;
    for (double& x : dist) x = d *= 0.5;

    if (c.format == "csv") {
        std::cout << "step,distance,value\n";
        for (std::size_t k = 0; k < c.steps; ++k)
            std::cout << k + 1 << ',' << csv_number(dist[k]) << ',' << csv_number(values[k]) << '\n';
        return kExitOk;
    }

    bool increasing = true;
    for (std::size_t k = 1; k < values.size(); ++k) increasing = increasing && values[k] > values[k - 1];
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "probe";
    doc["objective"] = cotlap_objective_name(obj);
    doc["n"] = n;
    doc["target"] = target;
    doc["distances"] = dist;
    doc["values"] = values;
    doc["regular_value"] = regular_value;
    doc["final_ratio"] = values.back() / regular_value;
    doc["strictly_increasing"] = increasing;
    emit(doc);
    return kExitOk;
}

// ---- sweep ---------------------------------------------------------------

struct SweepCmd
{
    std::string family = "isoceles-triangle";
    std::size_t steps = 100;
    std::string format = "csv";
};

struct SweepRow
{
    std::vector<double> params;
    std::vector<double> theta;
    std::vector<double> eigenvalues;
    cotlap_spectrum_summary summary{};
    double sumcot = 0.0;
};

std::vector<SweepRow> sweep_rows(const SweepCmd& c, std::vector<std::string>& param_names)
{
    // Grids are uniform over the open parameter range: t_k = range * k / steps,
    // k = 1..steps-1.
    std::vector<std::pair<std::vector<double>, std::vector<double>>> points;
    const auto steps = static_cast<double>(c.steps);
    if (c.family == "isoceles-triangle") {
        param_names = {"t"};
        for (std::size_t k = 1; k < c.steps; ++k) {
            const double t = 0.5 * kPi * static_cast<double>(k) / steps;
            points.push_back({{t}, {t, t, kPi - 2.0 * t}});
        }
    } else if (c.family == "rectangle") {
        param_names = {"t"};
        for (std::size_t k = 1; k < c.steps; ++k) {
            const double t = 0.5 * kPi * static_cast<double>(k) / steps;
            points.push_back({{t}, {t, 0.5 * kPi - t, t, 0.5 * kPi - t}});
        }
    } else if (c.family == "triangle") {
        param_names = {"s", "t"};
        for (std::size_t i = 1; i < c.steps; ++i) {
            for (std::size_t j = 1; i + j < c.steps; ++j) {
                const double s = kPi * static_cast<double>(i) / steps;
                const double t = kPi * static_cast<double>(j) / steps;
                points.push_back({{s, t}, {s, t, kPi - s - t}});
            }
        }
    } else {
        throw CliError{"InvalidArgument",
                       "unknown family '" + c.family + "' (isoceles-triangle, rectangle, triangle)"};
    }

    std::vector<SweepRow> rows;
    for (auto& [params, theta] : points) {
        Profile p = make_profile(theta);
        Matrix l = cyclic_laplacian(p.get());
        SpectrumResult s = spectrum_of(l.get());
        SweepRow row{params, theta, s.values, s.summary, 0.0};
        check(cotlap_evaluate(COTLAP_OBJ_SUMCOT, p.get(), &row.sumcot));
        rows.push_back(std::move(row));
    }
    return rows;
}

int run_sweep(const SweepCmd& c)
{
    if (c.steps < 2) throw CliError{"InvalidArgument", "--steps must be at least 2"};
    std::vector<std::string> names;
    const std::vector<SweepRow> rows = sweep_rows(c, names);
    const std::size_t n = rows.empty() ? 0 : rows.front().theta.size();

    if (c.format == "csv") {
        for (const auto& name : names) std::cout << name << ',';
        for (std::size_t i = 0; i < n; ++i) std::cout << "theta_" << i << ',';
        for (std::size_t i = 1; i < n; ++i) std::cout << "lambda" << i << ',';
        std::cout << "sum_nontrivial,product_nontrivial,sumcot\n";
        for (const SweepRow& r : rows) {
            for (double v : r.params) std::cout << csv_number(v) << ',';
            for (double v : r.theta) std::cout << csv_number(v) << ',';
            for (std::size_t i = 1; i < n; ++i) std::cout << csv_number(r.eigenvalues[i]) << ',';
            std::cout << csv_number(r.summary.sum_nontrivial) << ',' << csv_number(r.summary.product_nontrivial)
                      << ',' << csv_number(r.sumcot) << '\n';
        }
        return kExitOk;
    }

    json out = json::array();
    std::size_t argmax = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const SweepRow& r = rows[k];
        json row;
        for (std::size_t i = 0; i < names.size(); ++i) row[names[i]] = r.params[i];
        row["theta"] = r.theta;
        row["eigenvalues"] = r.eigenvalues;
        row["sum_nontrivial"] = r.summary.sum_nontrivial;
        row["product_nontrivial"] = r.summary.product_nontrivial;
        row["sumcot"] = r.sumcot;
        out.push_back(row);
        if (r.eigenvalues[1] > rows[argmax].eigenvalues[1]) argmax = k;
    }
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "sweep";
    doc["family"] = c.family;
    doc["steps"] = c.steps;
    doc["argmax_lambda1"] = argmax;
    doc["rows"] = out;
    emit(doc);
    return kExitOk;
}

void report_error(const std::string& code, const std::string& message)
{
    json err;
    err["schema_version"] = kSchemaVersion;
    err["error"] = {{"code", code}, {"message", message}};
    std::cerr << err.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cotangent Laplacians of cyclic polygons and planar meshes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cotlap_version()));

    const auto formats = CLI::IsMember({"json", "csv"});

    SpectrumCmd spectrum;
    auto* spec_cmd = app.add_subcommand("spectrum", "Cyclic Laplacian, spectrum and identity residuals");
    spectrum.input.add_to(spec_cmd);
    spec_cmd->add_option("--format", spectrum.format, "json or csv")->check(formats);

    MeshCmd mesh;
    auto* mesh_cmd = app.add_subcommand("mesh-spectrum", "Mesh Laplacian and spectrum");
    mesh.input.add_to(mesh_cmd);
    mesh_cmd->add_option("--apex", mesh.apex, "Fan apex for polygon input");
    mesh_cmd->add_option("--convention", mesh.convention, "full or half cotangent weights")
        ->check(CLI::IsMember({"full", "half"}));
    mesh_cmd->add_option("--values", mesh.values, "Comma-separated vertex values for the Dirichlet energy")
        ->delimiter(',');
    mesh_cmd->add_option("--format", mesh.format, "json or csv")->check(formats);

    VerifyCmd verify;
    auto* verify_cmd = app.add_subcommand("verify", "Sample a theorem's inequality");
    verify_cmd->add_option("theorem", verify.theorem, "Theorem id, e.g. T2-lambda1-max or T3-sum-min(7)")
        ->required();
    verify_cmd->add_option("--n", verify.n, "Polygon size for T3 ids");
    verify_cmd->add_option("--samples", verify.samples, "Number of samples");
    verify_cmd->add_option("--seed", verify.seed, "Random seed");
    verify_cmd->add_option("--workers", verify.workers, "Worker threads (0: all cores); never changes the report");
    verify_cmd->add_option("--tolerance", verify.tolerance, "Allowed excess over the bound; negative demands a margin");
    verify_cmd->add_option("--min-angle", verify.min_angle, "Reject samples with a smaller arc")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--near-radius", verify.near_radius, "Neighbourhood of the regular profile")
        ->check(CLI::NonNegativeNumber);
    std::string verify_format = "json";
    verify_cmd->add_option("--format", verify_format, "json")->check(CLI::IsMember({"json"}));

    OptimizeCmd optimize;
    auto* opt_cmd = app.add_subcommand("optimize", "Minimize an objective over the arc simplex");
    optimize.input.add_to(opt_cmd);
    opt_cmd->add_option("--objective", optimize.objective, "sumcot, gquad (g4), esym");
    opt_cmd->add_option("--n", optimize.n, "Polygon size for random starts");
    opt_cmd->add_option("--starts", optimize.starts, "Number of random starts")->check(CLI::PositiveNumber);
    opt_cmd->add_option("--seed", optimize.seed, "Random seed for starts");
    opt_cmd->add_option("--tolerance", optimize.tolerance, "Reduced-gradient tolerance")->check(CLI::PositiveNumber);
    opt_cmd->add_option("--max-iterations", optimize.max_iterations, "Iteration budget per start");
    std::string opt_format = "json";
    opt_cmd->add_option("--format", opt_format, "json")->check(CLI::IsMember({"json"}));

    ProbeCmd probe;
    auto* probe_cmd = app.add_subcommand("probe", "Objective along a path to a boundary point");
    probe_cmd->add_option("--objective", probe.objective, "sumcot, gquad (g4), esym, lambda1");
    probe_cmd->add_option("--target", probe.target, "Boundary point, first entry 0")->delimiter(',')->required();
    probe_cmd->add_flag("--degrees", probe.degrees, "Target is in degrees");
    probe_cmd->add_option("--steps", probe.steps, "Number of halvings (1..60)");
    probe_cmd->add_option("--format", probe.format, "json or csv")->check(formats);

    SweepCmd sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate spectra over a polygon family");
    sweep_cmd->add_option("--family", sweep.family, "isoceles-triangle, rectangle, triangle");
    sweep_cmd->add_option("--steps", sweep.steps, "Grid resolution");
    sweep_cmd->add_option("--format", sweep.format, "csv or json")->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error("Usage", e.what());
        return kExitUsage;
    }

    try {
        if (spec_cmd->parsed()) return run_spectrum(spectrum);
        if (mesh_cmd->parsed()) return run_mesh(mesh);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (opt_cmd->parsed()) return run_optimize(optimize);
        if (probe_cmd->parsed()) return run_probe(probe);
        if (sweep_cmd->parsed()) return run_sweep(sweep);
    } catch (const CliError& e) {
        report_error(e.code, e.message);
        return kExitUsage;
    } catch (const std::exception& e) {
        report_error("Internal", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
