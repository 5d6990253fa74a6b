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
#include <cotlap/cotlap.h>

#include <cotlap/cyclic.hpp>
#include <cotlap/error.hpp>
#include <cotlap/extremum.hpp>
#include <cotlap/mesh.hpp>
#include <cotlap/spectrum.hpp>

#include <algorithm>
#include <cstring>
#include <new>
#include <span>
#include <string>

struct cotlap_profile
{
    cotlap::ArcProfile value;
};

struct cotlap_matrix
{
    cotlap::LaplaceMatrix value;
};

struct cotlap_mesh
{
    cotlap::TriMesh value;
};

namespace {

thread_local std::string g_last_error;

/// Thrown inside the API layer only.
struct ApiFailure
{
    cotlap_status status;
    std::string message;
};

template <typename Fn>
cotlap_status guarded(Fn&& fn) noexcept
{
    try {
        fn();
        g_last_error.clear();
        return COTLAP_OK;
    } catch (const ApiFailure& f) {
        g_last_error = f.message;
        return f.status;
    } catch (const cotlap::Error& e) {
        g_last_error = e.what();
        return static_cast<cotlap_status>(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return COTLAP_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return COTLAP_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return COTLAP_ERR_INTERNAL;
    }
}

template <typename... Ptrs>
void require(const Ptrs*... ptrs)
{
    if (((ptrs == nullptr) || ...)) throw ApiFailure{COTLAP_ERR_NULL_ARGUMENT, "null argument"};
}

void require_capacity(std::size_t capacity, std::size_t needed)
{
    if (capacity < needed) {
        throw ApiFailure{COTLAP_ERR_BUFFER_TOO_SMALL, "output buffer holds " + std::to_string(capacity) +
                                                          " values, need " + std::to_string(needed)};
    }
}

void copy_out(std::span<const double> values, double* out, std::size_t capacity)
{
    require(out);
    require_capacity(capacity, values.size());
    std::copy(values.begin(), values.end(), out);
}

cotlap::WeightConvention convention(cotlap_convention c)
{
    switch (c) {
    case COTLAP_FULL_COT: return cotlap::WeightConvention::FullCot;
    case COTLAP_HALF_COT: return cotlap::WeightConvention::HalfCot;
    }
    throw ApiFailure{COTLAP_ERR_INVALID_ARGUMENT, "unknown weight convention"};
}

cotlap::Objective objective(cotlap_objective o)
{
    switch (o) {
    case COTLAP_OBJ_SUMCOT: return cotlap::Objective::SumCot;
    case COTLAP_OBJ_GQUAD: return cotlap::Objective::GQuad;
    case COTLAP_OBJ_ESYM: return cotlap::Objective::ESym;
    case COTLAP_OBJ_LAMBDA1: return cotlap::Objective::Lambda1;
    }
    throw ApiFailure{COTLAP_ERR_INVALID_ARGUMENT, "unknown objective"};
}

}  // namespace

extern "C" {

const char* cotlap_version(void)
{
    return "1.0.0";
}

const char* cotlap_status_name(cotlap_status status)
{
    switch (status) {
    case COTLAP_ERR_NULL_ARGUMENT: return "NullArgument";
    case COTLAP_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    default: break;
    }
    if (status < COTLAP_OK || status > COTLAP_ERR_INTERNAL) return "Unknown";
    // error_code_name returns views onto string literals.
    return cotlap::error_code_name(static_cast<cotlap::ErrorCode>(status)).data();
}

const char* cotlap_last_error(void)
{
    return g_last_error.c_str();
}

cotlap_status cotlap_profile_create(const double* theta, size_t n, cotlap_profile** out)
{
    return guarded([&] {
        require(theta, out);
        *out = new cotlap_profile{cotlap::make_arc_profile({theta, n})};
    });
}

cotlap_status cotlap_profile_regular(size_t n, cotlap_profile** out)
{
    return guarded([&] {
        require(out);
        *out = new cotlap_profile{cotlap::regular_profile(n)};
    });
}

void cotlap_profile_destroy(cotlap_profile* profile)
{
    delete profile;
}

size_t cotlap_profile_size(const cotlap_profile* profile)
{
    return profile ? profile->value.size() : 0;
}

cotlap_status cotlap_profile_theta(const cotlap_profile* profile, double* out, size_t capacity)
{
    return guarded([&] {
        require(profile);
        copy_out(profile->value.theta(), out, capacity);
    });
}

cotlap_status cotlap_profile_cot(const cotlap_profile* profile, double* out, size_t capacity)
{
    return guarded([&] {
        require(profile);
        copy_out(cotlap::cot_vector(profile->value).values(), out, capacity);
    });
}

cotlap_status cotlap_dcot(double theta, double* out)
{
    return guarded([&] {
        require(out);
        if (!(theta > 0.0 && theta < cotlap::kPi)) {
            throw cotlap::Error(cotlap::ErrorCode::NonPositiveAngle, "theta must lie in (0, pi)");
        }
        *out = cotlap::dcot(theta);
    });
}

cotlap_status cotlap_elementary_symmetric(const double* a, size_t n, int k, double* out)
{
    return guarded([&] {
        require(out);
        if (n > 0) require(a);
        *out = cotlap::elementary_symmetric(std::span<const double>(a, n), k);
    });
}

cotlap_status cotlap_charpoly(const cotlap_profile* profile, double* coeffs, size_t capacity, size_t* count)
{
    return guarded([&] {
        require(profile, coeffs, count);
        const cotlap::CotVector a = cotlap::cot_vector(profile->value);
        cotlap::CharPolyCoeffs p;
        if (a.size() == 3) {
            p = cotlap::charpoly3(a);
        } else if (a.size() == 4) {
            p = cotlap::charpoly4(a);
        } else {
            throw cotlap::Error(cotlap::ErrorCode::ArityMismatch, "closed-form characteristic polynomial needs n = 3 or 4");
        }
        copy_out(p.coeffs, coeffs, capacity);
        *count = p.coeffs.size();
    });
}

cotlap_status cotlap_lambda2_closed_form(const cotlap_profile* profile, double* out)
{
    return guarded([&] {
        require(profile, out);
        *out = cotlap::lambda2_closed_form(cotlap::cot_vector(profile->value));
    });
}

cotlap_status cotlap_continuant_det(const cotlap_profile* profile, double* out)
{
    return guarded([&] {
        require(profile, out);
        *out = cotlap::continuant_det(cotlap::cot_vector(profile->value));
    });
}

cotlap_status cotlap_matrix_tree_product(const cotlap_profile* profile, double* out)
{
    return guarded([&] {
        require(profile, out);
        *out = cotlap::matrix_tree_product(cotlap::cot_vector(profile->value));
    });
}

cotlap_status cotlap_cyclic_laplacian(const cotlap_profile* profile, cotlap_matrix** out)
{
    return guarded([&] {
        require(profile, out);
        *out = new cotlap_matrix{cotlap::assemble_cyclic(cotlap::cot_vector(profile->value))};
    });
}

cotlap_status cotlap_matrix_create(const double* row_major, size_t n, cotlap_matrix** out)
{
    return guarded([&] {
        require(row_major, out);
        cotlap::DenseMatrix m(n, std::vector<double>(row_major, row_major + n * n));
        *out = new cotlap_matrix{cotlap::LaplaceMatrix::from_dense(std::move(m))};
    });
}

void cotlap_matrix_destroy(cotlap_matrix* matrix)
{
    delete matrix;
}

size_t cotlap_matrix_dim(const cotlap_matrix* matrix)
{
    return matrix ? matrix->value.dim() : 0;
}

cotlap_status cotlap_matrix_entries(const cotlap_matrix* matrix, double* out, size_t capacity)
{
    return guarded([&] {
        require(matrix);
        copy_out(matrix->value.dense().data(), out, capacity);
    });
}

cotlap_status cotlap_matrix_spectrum(const cotlap_matrix* matrix, double* eigenvalues, size_t capacity,
                                     cotlap_spectrum_summary* summary)
{
    return guarded([&] {
        require(matrix, eigenvalues);
        require_capacity(capacity, matrix->value.dim());
        const cotlap::Spectrum s = cotlap::eigenvalues(matrix->value);
        copy_out(s.values, eigenvalues, capacity);
        if (summary) {
            summary->trace = matrix->value.trace();
            summary->sum_nontrivial = cotlap::sum_nontrivial(s);
            summary->product_nontrivial = cotlap::product_nontrivial(s);
            summary->pair_sum_nontrivial = cotlap::pair_sum_nontrivial(s);
        }
    });
}

cotlap_status cotlap_matrix_minor_det(const cotlap_matrix* matrix, size_t k, double* out)
{
    return guarded([&] {
        require(matrix, out);
        *out = cotlap::principal_minor_det(matrix->value, k);
    });
}

cotlap_status cotlap_mesh_create(const double* xy, size_t vertex_count, const size_t* faces, size_t face_count,
                                 cotlap_mesh** out)
{
    return guarded([&] {
        require(out);
        if (vertex_count > 0) require(xy);
        if (face_count > 0) require(faces);
        std::vector<cotlap::Vec2> vertices(vertex_count);
        for (std::size_t i = 0; i < vertex_count; ++i) vertices[i] = {xy[2 * i], xy[2 * i + 1]};
        std::vector<cotlap::Face> f(face_count);
        for (std::size_t i = 0; i < face_count; ++i) f[i] = {faces[3 * i], faces[3 * i + 1], faces[3 * i + 2]};
        *out = new cotlap_mesh{cotlap::TriMesh(std::move(vertices), std::move(f))};
    });
}

cotlap_status cotlap_mesh_cyclic_fan(const cotlap_profile* profile, size_t apex, double radius, cotlap_mesh** out)
{
    return guarded([&] {
        require(profile, out);
        *out = new cotlap_mesh{cotlap::cyclic_polygon_mesh(profile->value, apex, radius)};
    });
}

void cotlap_mesh_destroy(cotlap_mesh* mesh)
{
    delete mesh;
}

size_t cotlap_mesh_vertex_count(const cotlap_mesh* mesh)
{
    return mesh ? mesh->value.vertex_count() : 0;
}

size_t cotlap_mesh_face_count(const cotlap_mesh* mesh)
{
    return mesh ? mesh->value.face_count() : 0;
}

cotlap_status cotlap_mesh_corner_angles(const cotlap_mesh* mesh, size_t face, double out[3])
{
    return guarded([&] {
        require(mesh, out);
        const auto angles = cotlap::corner_angles(mesh->value, face);
        std::copy(angles.begin(), angles.end(), out);
    });
}

cotlap_status cotlap_mesh_cot_weight(const cotlap_mesh* mesh, size_t i, size_t j, cotlap_convention conv,
                                     double* out)
{
    return guarded([&] {
        require(mesh, out);
        *out = cotlap::cot_weight(mesh->value, i, j, convention(conv));
    });
}

cotlap_status cotlap_mesh_laplacian(const cotlap_mesh* mesh, cotlap_convention conv, cotlap_matrix** out)
{
    return guarded([&] {
        require(mesh, out);
        *out = new cotlap_matrix{cotlap::assemble_mesh_laplacian(mesh->value, convention(conv))};
    });
}

cotlap_status cotlap_mesh_dirichlet_energy(const cotlap_mesh* mesh, const double* f, size_t n,
                                           cotlap_convention conv, double* out)
{
    return guarded([&] {
        require(mesh, f, out);
        *out = cotlap::dirichlet_energy(mesh->value, cotlap::PLFunction{{f, f + n}}, convention(conv));
    });
}

cotlap_status cotlap_mesh_quadrature_energy(const cotlap_mesh* mesh, const double* f, size_t n, double* out)
{
    return guarded([&] {
        require(mesh, f, out);
        *out = cotlap::quadrature_energy(mesh->value, cotlap::PLFunction{{f, f + n}});
    });
}

cotlap_status cotlap_triangulation_independence(const cotlap_profile* profile, cotlap_independence_report* out)
{
    return guarded([&] {
        require(profile, out);
        const auto r = cotlap::check_triangulation_independence(profile->value);
        *out = {r.max_laplacian_difference, r.max_diagonal_weight, r.max_cyclic_difference};
    });
}

cotlap_status cotlap_objective_parse(const char* name, cotlap_objective* out)
{
    return guarded([&] {
        require(name, out);
        const auto obj = cotlap::parse_objective(name);
        if (!obj) throw ApiFailure{COTLAP_ERR_INVALID_ARGUMENT, std::string("unknown objective '") + name + "'"};
        *out = static_cast<cotlap_objective>(*obj);
    });
}

const char* cotlap_objective_name(cotlap_objective obj)
{
    switch (obj) {
    case COTLAP_OBJ_SUMCOT: return "sumcot";
    case COTLAP_OBJ_GQUAD: return "gquad";
    case COTLAP_OBJ_ESYM: return "esym";
    case COTLAP_OBJ_LAMBDA1: return "lambda1";
    }
    return "unknown";
}

cotlap_status cotlap_evaluate(cotlap_objective obj, const cotlap_profile* profile, double* out)
{
    return guarded([&] {
        require(profile, out);
        *out = cotlap::evaluate(objective(obj), profile->value);
    });
}

cotlap_status cotlap_gradient(cotlap_objective obj, const cotlap_profile* profile, double* out, size_t capacity)
{
    return guarded([&] {
        require(profile);
        copy_out(cotlap::gradient(objective(obj), profile->value), out, capacity);
    });
}

cotlap_status cotlap_lagrange_residual(cotlap_objective obj, const cotlap_profile* profile, double* residual,
                                       double* multiplier)
{
    return guarded([&] {
        require(profile, residual, multiplier);
        const auto r = cotlap::lagrange_residual(objective(obj), profile->value);
        *residual = r.residual;
        *multiplier = r.multiplier;
    });
}

void cotlap_minimize_options_default(cotlap_minimize_options* opts)
{
    if (!opts) return;
    const cotlap::MinimizeOptions d;
    *opts = {d.tolerance, d.max_iterations, d.interior_floor};
}

cotlap_status cotlap_minimize(cotlap_objective obj, const cotlap_profile* start, const cotlap_minimize_options* opts,
                              double* final_theta, size_t capacity, cotlap_optimization_summary* out)
{
    bool converged = true;
    const cotlap_status status = guarded([&] {
        require(start, final_theta, out);
        require_capacity(capacity, start->value.size());
        cotlap::MinimizeOptions o;
        if (opts) {
            o.tolerance = opts->tolerance;
            o.max_iterations = opts->max_iterations;
            o.interior_floor = opts->interior_floor;
        }
        const cotlap::OptimizationReport r = cotlap::minimize(objective(obj), start->value, o);
        copy_out(r.final.theta(), final_theta, capacity);
        *out = {r.objective_value, r.iterations, r.reduced_gradient_norm, r.lagrange_multiplier, r.converged ? 1 : 0};
        converged = r.converged;
    });
    if (status == COTLAP_OK && !converged) {
        g_last_error = "minimization did not reach the gradient tolerance";
        return COTLAP_ERR_NOT_CONVERGED;
    }
    return status;
}

cotlap_status cotlap_boundary_probe(cotlap_objective obj, size_t n, const double* target, size_t steps,
                                    double* values)
{
    return guarded([&] {
        require(target, values);
        const auto v = cotlap::boundary_probe(objective(obj), n, {target, n}, steps);
        std::copy(v.begin(), v.end(), values);
    });
}

cotlap_status cotlap_sample_profiles(size_t n, size_t count, uint64_t seed, double min_angle, double* out)
{
    return guarded([&] {
        if (count > 0) require(out);
        const auto samples = cotlap::sample_thetas(n, count, seed, min_angle);
        for (std::size_t i = 0; i < samples.size(); ++i) std::copy(samples[i].begin(), samples[i].end(), out + i * n);
    });
}

void cotlap_verify_options_default(cotlap_verify_options* opts)
{
    if (!opts) return;
    const cotlap::VerificationOptions d;
    *opts = {d.samples, d.seed, d.workers, d.tolerance, d.min_angle, d.near_radius};
}

cotlap_status cotlap_theorem_size(const char* theorem_id, size_t n, size_t* out)
{
    return guarded([&] {
        require(theorem_id, out);
        *out = cotlap::parse_theorem(theorem_id, n == 0 ? std::nullopt : std::optional<std::size_t>(n)).n;
    });
}

cotlap_status cotlap_verify(const char* theorem_id, size_t n, const cotlap_verify_options* opts,
                            cotlap_verification* out, double* extremal_theta, size_t capacity)
{
    return guarded([&] {
        require(theorem_id, out);
        const cotlap::TheoremSpec spec =
            cotlap::parse_theorem(theorem_id, n == 0 ? std::nullopt : std::optional<std::size_t>(n));
        if (extremal_theta) require_capacity(capacity, spec.n);
        cotlap::VerificationOptions o;
        if (opts) {
            o.samples = opts->samples;
            o.seed = opts->seed;
            o.workers = opts->workers;
            o.tolerance = opts->tolerance;
            o.min_angle = opts->min_angle;
            o.near_radius = opts->near_radius;
        }
        const cotlap::VerificationReport r = cotlap::verify_sampling(spec, o);
        cotlap_verification v{};
        const std::string name = cotlap::theorem_name(spec);
        std::strncpy(v.theorem, name.c_str(), sizeof(v.theorem) - 1);
        v.n = spec.n;
        v.samples = r.samples;
        v.seed = r.seed;
        v.bound = r.bound;
        v.upper = r.upper ? 1 : 0;
        v.violations = r.violations;
        v.extremal_value = r.extremal_value;
        v.gap = r.gap;
        v.near_regular_count = r.near_regular_count;
        v.has_near_regular_best = r.near_regular_best ? 1 : 0;
        v.near_regular_best = r.near_regular_best.value_or(0.0);
        *out = v;
        if (extremal_theta) std::copy(r.extremal_theta.begin(), r.extremal_theta.end(), extremal_theta);
    });
}

}  // extern "C"
