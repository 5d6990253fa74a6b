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
#include <cotlap/mesh.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace cotlap {

namespace {

Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

EdgeKey edge_key(std::size_t i, std::size_t j)
{
    return i < j ? EdgeKey{i, j} : EdgeKey{j, i};
}

/// cot of the interior angle at `at` in triangle (at, u, v).
double corner_cot(Vec2 at, Vec2 u, Vec2 v)
{
    const Vec2 eu = u - at;
    const Vec2 ev = v - at;
    return dot(eu, ev) / std::abs(cross(eu, ev));
}

/// Vertex of `face` that is neither i nor j.
std::size_t opposite(const Face& face, std::size_t i, std::size_t j)
{
    for (std::size_t v : face)
        if (v != i && v != j) return v;
    throw Error(ErrorCode::Internal, "face does not contain the edge");
}

}  // namespace

TriMesh::TriMesh(std::vector<Vec2> vertices, std::vector<Face> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces))
{
    const std::size_t nv = vertices_.size();
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        const Face& face = faces_[f];
        for (std::size_t v : face) {
            if (v >= nv) {
                throw Error(ErrorCode::IndexOutOfRange,
                            "face " + std::to_string(f) + " references vertex " + std::to_string(v) +
                                " but the mesh has " + std::to_string(nv));
            }
        }
        if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2]) {
            throw Error(ErrorCode::DegenerateFace, "face " + std::to_string(f) + " repeats a vertex");
        }
        if (std::abs(signed_area(f)) <= kDegenerateArea) {
            throw Error(ErrorCode::DegenerateFace, "face " + std::to_string(f) + " has zero area");
        }
        for (int k = 0; k < 3; ++k) edges_[edge_key(face[k], face[(k + 1) % 3])].push_back(f);
    }
    for (const auto& [edge, incident] : edges_) {
        if (incident.size() > 2) {
            throw Error(ErrorCode::NonManifoldEdge,
                        "edge (" + std::to_string(edge.first) + ", " + std::to_string(edge.second) +
                            ") has " + std::to_string(incident.size()) + " incident faces");
        }
    }
}

bool TriMesh::is_boundary(std::size_t i, std::size_t j) const
{
    const auto it = edges_.find(edge_key(i, j));
    if (it == edges_.end()) throw Error(ErrorCode::EdgeNotFound, "edge not in mesh");
    return it->second.size() == 1;
}

double TriMesh::signed_area(std::size_t face) const
{
    const Face& f = faces_.at(face);
    const Vec2 p0 = vertices_[f[0]];
    return 0.5 * cross(vertices_[f[1]] - p0, vertices_[f[2]] - p0);
}

double TriMesh::total_area() const
{
    double a = 0.0;
    for (std::size_t f = 0; f < faces_.size(); ++f) a += std::abs(signed_area(f));
    return a;
}

std::vector<Vec2> cyclic_vertices(const ArcProfile& p, double radius)
{
    if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
    std::vector<Vec2> out;
    out.reserve(p.size());
    double phi = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        out.push_back({radius * std::cos(phi), radius * std::sin(phi)});
        phi += 2.0 * p[k];
    }
    return out;
}

std::vector<Face> fan_triangulation(std::size_t n, std::size_t apex)
{
    if (n < 3) throw Error(ErrorCode::TooFewArcs, "a polygon needs at least 3 vertices");
    if (apex >= n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "apex " + std::to_string(apex) + " out of range for n = " + std::to_string(n));
    }
    std::vector<Face> faces;
    faces.reserve(n - 2);
    for (std::size_t k = 1; k + 1 < n; ++k) faces.push_back({apex, (apex + k) % n, (apex + k + 1) % n});
    return faces;
}

std::array<double, 3> corner_angles(Vec2 p0, Vec2 p1, Vec2 p2)
{
    const auto angle_at = [](Vec2 at, Vec2 u, Vec2 v) {
        const Vec2 eu = u - at;
        const Vec2 ev = v - at;
        return std::atan2(std::abs(cross(eu, ev)), dot(eu, ev));
    };
    return {angle_at(p0, p1, p2), angle_at(p1, p2, p0), angle_at(p2, p0, p1)};
}

std::array<double, 3> corner_angles(const TriMesh& mesh, std::size_t face)
{
    if (face >= mesh.face_count()) throw Error(ErrorCode::IndexOutOfRange, "face index out of range");
    const Face& f = mesh.faces()[face];
    const auto v = mesh.vertices();
    return corner_angles(v[f[0]], v[f[1]], v[f[2]]);
}

double cot_weight(const TriMesh& mesh, std::size_t i, std::size_t j, WeightConvention conv)
{
    const auto it = mesh.edges().find(edge_key(i, j));
    if (it == mesh.edges().end()) {
        throw Error(ErrorCode::EdgeNotFound,
                    "edge (" + std::to_string(i) + ", " + std::to_string(j) + ") not in mesh");
    }
    const auto v = mesh.vertices();
    double w = 0.0;
    for (std::size_t f : it->second) {
        const std::size_t k = opposite(mesh.faces()[f], i, j);
        w += corner_cot(v[k], v[i], v[j]);
    }
    return conv == WeightConvention::HalfCot ? 0.5 * w : w;
}

LaplaceMatrix assemble_mesh_laplacian(const TriMesh& mesh, WeightConvention conv)
{
    LaplaceBuilder builder(mesh.vertex_count());
    for (const auto& [edge, incident] : mesh.edges())
        builder.add_edge(edge.first, edge.second, cot_weight(mesh, edge.first, edge.second, conv));
    return std::move(builder).build();
}

double dirichlet_energy(const TriMesh& mesh, const PLFunction& f, WeightConvention conv)
{
    if (f.values.size() != mesh.vertex_count()) {
        throw Error(ErrorCode::LengthMismatch,
                    "function has " + std::to_string(f.values.size()) + " values for " +
                        std::to_string(mesh.vertex_count()) + " vertices");
    }
    // Edge sum instead of f^T L f: avoids cancellation against the diagonal.
    double e = 0.0;
    for (const auto& [edge, incident] : mesh.edges()) {
        const double d = f.values[edge.first] - f.values[edge.second];
        e += cot_weight(mesh, edge.first, edge.second, conv) * d * d;
    }
    return 0.5 * e;
}

double quadrature_energy(const TriMesh& mesh, const PLFunction& f)
{
    if (f.values.size() != mesh.vertex_count()) {
        throw Error(ErrorCode::LengthMismatch, "function length does not match vertex count");
    }
    const auto v = mesh.vertices();
    double e = 0.0;
    for (const Face& face : mesh.faces()) {
        const Vec2 e1 = v[face[1]] - v[face[0]];
        const Vec2 e2 = v[face[2]] - v[face[0]];
        const double det = cross(e1, e2);
        if (std::abs(0.5 * det) <= kDegenerateArea) throw Error(ErrorCode::DegenerateFace, "zero-area face");
        const double d1 = f.values[face[1]] - f.values[face[0]];
        const double d2 = f.values[face[2]] - f.values[face[0]];
        // Solve [e1; e2] g = [d1; d2].
        const double gx = (d1 * e2.y - d2 * e1.y) / det;
        const double gy = (e1.x * d2 - e2.x * d1) / det;
        e += 0.5 * std::abs(det) * (gx * gx + gy * gy);
    }
    return 0.5 * e;
}

TriMesh cyclic_polygon_mesh(const ArcProfile& p, std::size_t apex, double radius)
{
    return TriMesh(cyclic_vertices(p, radius), fan_triangulation(p.size(), apex));
}

IndependenceReport check_triangulation_independence(const ArcProfile& p)
{
    const std::size_t n = p.size();
    IndependenceReport report;
    const LaplaceMatrix cyclic = assemble_cyclic(cot_vector(p));
    const LaplaceMatrix reference = assemble_mesh_laplacian(cyclic_polygon_mesh(p, 0), WeightConvention::FullCot);
    for (std::size_t apex = 0; apex < n; ++apex) {
        const TriMesh mesh = cyclic_polygon_mesh(p, apex);
        const LaplaceMatrix l = assemble_mesh_laplacian(mesh, WeightConvention::FullCot);
        report.max_laplacian_difference =
            std::max(report.max_laplacian_difference, max_abs_difference(l.dense(), reference.dense()));
        report.max_cyclic_difference =
            std::max(report.max_cyclic_difference, max_abs_difference(l.dense(), cyclic.dense()));
        for (const auto& [edge, incident] : mesh.edges()) {
            if (incident.size() == 2) {
                report.max_diagonal_weight =
                    std::max(report.max_diagonal_weight,
                             std::abs(cot_weight(mesh, edge.first, edge.second, WeightConvention::FullCot)));
            }
        }
    }
    return report;
}

}  // namespace cotlap
