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

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace cotlap {

struct Vec2
{
    double x = 0.0;
    double y = 0.0;
};

using Face = std::array<std::size_t, 3>;
using EdgeKey = std::pair<std::size_t, std::size_t>;  // first < second

/// Faces whose |signed area| is at or below this are rejected.
inline constexpr double kDegenerateArea = 1e-12;

/// Planar simplicial triangulation.
class TriMesh
{
public:
    /// Validates indices, non-degeneracy, and that every edge has one or two
    /// incident faces.
    TriMesh(std::vector<Vec2> vertices, std::vector<Face> faces);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t face_count() const noexcept { return faces_.size(); }
    std::span<const Vec2> vertices() const noexcept { return vertices_; }
    std::span<const Face> faces() const noexcept { return faces_; }

    /// Edge -> indices of incident faces.
    const std::map<EdgeKey, std::vector<std::size_t>>& edges() const noexcept { return edges_; }

    bool is_boundary(std::size_t i, std::size_t j) const;
    double signed_area(std::size_t face) const;
    double total_area() const;

private:
    std::vector<Vec2> vertices_;
    std::vector<Face> faces_;
    std::map<EdgeKey, std::vector<std::size_t>> edges_;
};

/// Scalar per vertex; linear on each face.
struct PLFunction
{
    std::vector<double> values;
};

/// HalfCot carries the 1/2 of the textbook edge weight and reproduces the
/// continuous Dirichlet energy; FullCot drops it and matches the cyclic
/// Laplacian built by assemble_cyclic.
enum class WeightConvention { FullCot, HalfCot };

/// Vertex k at polar angle 2 * (theta_0 + ... + theta_{k-1}).
std::vector<Vec2> cyclic_vertices(const ArcProfile& p, double radius = 1.0);

/// Faces (apex, apex+k, apex+k+1), k = 1..n-2, indices mod n.
std::vector<Face> fan_triangulation(std::size_t n, std::size_t apex);

/// Interior angles at (p0, p1, p2), via atan2(|cross|, dot).
std::array<double, 3> corner_angles(Vec2 p0, Vec2 p1, Vec2 p2);
std::array<double, 3> corner_angles(const TriMesh& mesh, std::size_t face);

double cot_weight(const TriMesh& mesh, std::size_t i, std::size_t j, WeightConvention conv);

LaplaceMatrix assemble_mesh_laplacian(const TriMesh& mesh, WeightConvention conv);

/// 1/2 f^T L f.
double dirichlet_energy(const TriMesh& mesh, const PLFunction& f, WeightConvention conv);

/// 1/2 sum over faces of area * |grad f|^2, with the gradient of the linear
/// interpolant on each face.
double quadrature_energy(const TriMesh& mesh, const PLFunction& f);

/// Cyclic polygon on the circle of given radius, fan-triangulated from apex.
TriMesh cyclic_polygon_mesh(const ArcProfile& p, std::size_t apex, double radius = 1.0);

struct IndependenceReport
{
    /// Largest entrywise difference between fan Laplacians over all apexes.
    double max_laplacian_difference = 0.0;
    /// Largest |weight| over all interior diagonals of all fans.
    double max_diagonal_weight = 0.0;
    /// Largest entrywise difference between the FullCot fan Laplacian and
    /// assemble_cyclic.
    double max_cyclic_difference = 0.0;
};

/// Builds every fan triangulation of the polygon and compares them.
IndependenceReport check_triangulation_independence(const ArcProfile& p);

}  // namespace cotlap
