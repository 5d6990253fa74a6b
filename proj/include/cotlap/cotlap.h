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
#ifndef COTLAP_H
#define COTLAP_H

/*
 * C interface to libcotlap.
 *
 * Every fallible call returns a cotlap_status. On failure a human-readable
 * message is available from cotlap_last_error() until the next call on the
 * same thread. Handles are opaque and owned by the caller; release them with
 * the matching *_destroy function (NULL is accepted). Output arrays are
 * caller-allocated; a call fails with COTLAP_ERR_BUFFER_TOO_SMALL when the
 * given capacity is below what it needs to write.
 *
 * Angles are radians. A polygon profile holds the arc half-angles
 * theta_0..theta_{n-1} (sum pi) of a polygon inscribed in the unit circle.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COTLAP_BUILDING)
#    define COTLAP_API __declspec(dllexport)
#  else
#    define COTLAP_API __declspec(dllimport)
#  endif
#else
#  define COTLAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cotlap_status {
    COTLAP_OK = 0,
    COTLAP_ERR_TOO_FEW_ARCS = 1,
    COTLAP_ERR_NON_POSITIVE_ANGLE = 2,
    COTLAP_ERR_SUM_MISMATCH = 3,
    COTLAP_ERR_INDEX_OUT_OF_RANGE = 4,
    COTLAP_ERR_IDENTITY_VIOLATION = 5,
    COTLAP_ERR_NEGATIVE_DISCRIMINANT = 6,
    COTLAP_ERR_DEGENERATE_FACE = 7,
    COTLAP_ERR_NON_MANIFOLD_EDGE = 8,
    COTLAP_ERR_EDGE_NOT_FOUND = 9,
    COTLAP_ERR_LENGTH_MISMATCH = 10,
    COTLAP_ERR_NOT_SYMMETRIC = 11,
    COTLAP_ERR_NO_CONVERGENCE = 12,
    COTLAP_ERR_ARITY_MISMATCH = 13,
    COTLAP_ERR_UNSUPPORTED = 14,
    COTLAP_ERR_START_NOT_INTERIOR = 15,
    COTLAP_ERR_NOT_CONVERGED = 16,
    COTLAP_ERR_INVALID_TARGET = 17,
    COTLAP_ERR_UNKNOWN_THEOREM = 18,
    COTLAP_ERR_INVALID_ARGUMENT = 19,
    COTLAP_ERR_INTERNAL = 20,
    COTLAP_ERR_NULL_ARGUMENT = 21,
    COTLAP_ERR_BUFFER_TOO_SMALL = 22
} cotlap_status;

typedef enum cotlap_convention {
    COTLAP_FULL_COT = 0, /* sum of opposite cotangents */
    COTLAP_HALF_COT = 1  /* half of that; matches the continuous Dirichlet energy */
} cotlap_convention;

typedef enum cotlap_objective {
    COTLAP_OBJ_SUMCOT = 0,
    COTLAP_OBJ_GQUAD = 1,
    COTLAP_OBJ_ESYM = 2,
    COTLAP_OBJ_LAMBDA1 = 3
} cotlap_objective;

typedef struct cotlap_profile cotlap_profile;
typedef struct cotlap_matrix cotlap_matrix;
typedef struct cotlap_mesh cotlap_mesh;

COTLAP_API const char* cotlap_version(void);
COTLAP_API const char* cotlap_status_name(cotlap_status status);
COTLAP_API const char* cotlap_last_error(void);

/* ---- profiles ---------------------------------------------------------- */

COTLAP_API cotlap_status cotlap_profile_create(const double* theta, size_t n, cotlap_profile** out);
COTLAP_API cotlap_status cotlap_profile_regular(size_t n, cotlap_profile** out);
COTLAP_API void cotlap_profile_destroy(cotlap_profile* profile);
COTLAP_API size_t cotlap_profile_size(const cotlap_profile* profile);
COTLAP_API cotlap_status cotlap_profile_theta(const cotlap_profile* profile, double* out, size_t capacity);
/* a_k = cot(theta_k) */
COTLAP_API cotlap_status cotlap_profile_cot(const cotlap_profile* profile, double* out, size_t capacity);

/* ---- identities -------------------------------------------------------- */

COTLAP_API cotlap_status cotlap_dcot(double theta, double* out);
COTLAP_API cotlap_status cotlap_elementary_symmetric(const double* a, size_t n, int k, double* out);
/* Characteristic polynomial det(L - xI) for n = 3 or 4, highest power first;
 * writes n + 1 coefficients. */
COTLAP_API cotlap_status cotlap_charpoly(const cotlap_profile* profile, double* coeffs, size_t capacity,
                                         size_t* count);
COTLAP_API cotlap_status cotlap_lambda2_closed_form(const cotlap_profile* profile, double* out);
/* Determinant of the cyclic Laplacian with first row/column removed. */
COTLAP_API cotlap_status cotlap_continuant_det(const cotlap_profile* profile, double* out);
/* n * continuant determinant. */
COTLAP_API cotlap_status cotlap_matrix_tree_product(const cotlap_profile* profile, double* out);

/* ---- matrices and spectra ---------------------------------------------- */

typedef struct cotlap_spectrum_summary {
    double trace;
    double sum_nontrivial;      /* lambda_1 + ... + lambda_{n-1} */
    double product_nontrivial;  /* lambda_1 * ... * lambda_{n-1} */
    double pair_sum_nontrivial; /* sum over i < j of lambda_i lambda_j, i, j >= 1 */
} cotlap_spectrum_summary;

COTLAP_API cotlap_status cotlap_cyclic_laplacian(const cotlap_profile* profile, cotlap_matrix** out);
/* Validates symmetry and zero row sums. */
COTLAP_API cotlap_status cotlap_matrix_create(const double* row_major, size_t n, cotlap_matrix** out);
COTLAP_API void cotlap_matrix_destroy(cotlap_matrix* matrix);
COTLAP_API size_t cotlap_matrix_dim(const cotlap_matrix* matrix);
COTLAP_API cotlap_status cotlap_matrix_entries(const cotlap_matrix* matrix, double* out, size_t capacity);
/* Ascending eigenvalues (n values); summary may be NULL. */
COTLAP_API cotlap_status cotlap_matrix_spectrum(const cotlap_matrix* matrix, double* eigenvalues, size_t capacity,
                                                cotlap_spectrum_summary* summary);
/* Determinant of the principal minor with row/column k removed. */
COTLAP_API cotlap_status cotlap_matrix_minor_det(const cotlap_matrix* matrix, size_t k, double* out);

/* ---- meshes ------------------------------------------------------------ */

typedef struct cotlap_independence_report {
    double max_laplacian_difference;
    double max_diagonal_weight;
    double max_cyclic_difference;
} cotlap_independence_report;

/* xy holds 2 * vertex_count coordinates; faces holds 3 * face_count
 * 0-based vertex indices. */
COTLAP_API cotlap_status cotlap_mesh_create(const double* xy, size_t vertex_count, const size_t* faces,
                                            size_t face_count, cotlap_mesh** out);
/* Polygon inscribed in a circle of the given radius, fan-triangulated from apex. */
COTLAP_API cotlap_status cotlap_mesh_cyclic_fan(const cotlap_profile* profile, size_t apex, double radius,
                                                cotlap_mesh** out);
COTLAP_API void cotlap_mesh_destroy(cotlap_mesh* mesh);
COTLAP_API size_t cotlap_mesh_vertex_count(const cotlap_mesh* mesh);
COTLAP_API size_t cotlap_mesh_face_count(const cotlap_mesh* mesh);
COTLAP_API cotlap_status cotlap_mesh_corner_angles(const cotlap_mesh* mesh, size_t face, double out[3]);
COTLAP_API cotlap_status cotlap_mesh_cot_weight(const cotlap_mesh* mesh, size_t i, size_t j,
                                                cotlap_convention convention, double* out);
COTLAP_API cotlap_status cotlap_mesh_laplacian(const cotlap_mesh* mesh, cotlap_convention convention,
                                               cotlap_matrix** out);
COTLAP_API cotlap_status cotlap_mesh_dirichlet_energy(const cotlap_mesh* mesh, const double* f, size_t n,
                                                      cotlap_convention convention, double* out);
COTLAP_API cotlap_status cotlap_mesh_quadrature_energy(const cotlap_mesh* mesh, const double* f, size_t n,
                                                       double* out);
COTLAP_API cotlap_status cotlap_triangulation_independence(const cotlap_profile* profile,
                                                           cotlap_independence_report* out);

/* ---- extremum problems ------------------------------------------------- */

typedef struct cotlap_minimize_options {
    double tolerance;
    size_t max_iterations;
    double interior_floor;
} cotlap_minimize_options;

typedef struct cotlap_optimization_summary {
    double objective_value;
    size_t iterations;
    double reduced_gradient_norm;
    double lagrange_multiplier;
    int converged;
} cotlap_optimization_summary;

typedef struct cotlap_verify_options {
    size_t samples;
    uint64_t seed;
    size_t workers; /* 0: hardware concurrency; never changes the result */
    double tolerance;
    double min_angle;
    double near_radius;
} cotlap_verify_options;

typedef struct cotlap_verification {
    char theorem[32];
    size_t n;
    size_t samples;
    uint64_t seed;
    double bound;
    int upper; /* 1: quantity <= bound, 0: quantity >= bound */
    size_t violations;
    double extremal_value;
    double gap;
    size_t near_regular_count;
    int has_near_regular_best;
    double near_regular_best;
} cotlap_verification;

COTLAP_API cotlap_status cotlap_objective_parse(const char* name, cotlap_objective* out);
COTLAP_API const char* cotlap_objective_name(cotlap_objective objective);
COTLAP_API cotlap_status cotlap_evaluate(cotlap_objective objective, const cotlap_profile* profile, double* out);
COTLAP_API cotlap_status cotlap_gradient(cotlap_objective objective, const cotlap_profile* profile, double* out,
                                         size_t capacity);
COTLAP_API cotlap_status cotlap_lagrange_residual(cotlap_objective objective, const cotlap_profile* profile,
                                                  double* residual, double* multiplier);

COTLAP_API void cotlap_minimize_options_default(cotlap_minimize_options* opts);
/* Returns COTLAP_ERR_NOT_CONVERGED with every output filled in when the
 * iteration budget runs out. opts may be NULL. */
COTLAP_API cotlap_status cotlap_minimize(cotlap_objective objective, const cotlap_profile* start,
                                         const cotlap_minimize_options* opts, double* final_theta,
                                         size_t capacity, cotlap_optimization_summary* out);
/* Writes `steps` values. */
COTLAP_API cotlap_status cotlap_boundary_probe(cotlap_objective objective, size_t n, const double* target,
                                               size_t steps, double* values);
/* Writes count * n angles, row by row. */
COTLAP_API cotlap_status cotlap_sample_profiles(size_t n, size_t count, uint64_t seed, double min_angle,
                                                double* out);

COTLAP_API void cotlap_verify_options_default(cotlap_verify_options* opts);
/* Polygon size a theorem id resolves to; n = 0 means "not given". */
COTLAP_API cotlap_status cotlap_theorem_size(const char* theorem_id, size_t n, size_t* out);
/* extremal_theta may be NULL; otherwise it receives the extremal sample. */
COTLAP_API cotlap_status cotlap_verify(const char* theorem_id, size_t n, const cotlap_verify_options* opts,
                                       cotlap_verification* out, double* extremal_theta, size_t capacity);

#ifdef __cplusplus
}
#endif

#endif /* COTLAP_H */
