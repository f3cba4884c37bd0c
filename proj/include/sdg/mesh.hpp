#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdg/geometry.hpp"

namespace sdg {

// Staggered mesh hierarchy: a primal polygonal mesh whose cells are fanned
// into simplexes around an interior cell point, with edges split into the
// primal skeleton (polygon boundaries) and the dual skeleton (fan spokes).

enum class EdgeKind { Primal, Dual };

struct PrimalCell {
    int id = -1;
    std::vector<int> vertex_ids;    // CCW corners (primal vertices)
    int center_vertex = -1;         // interior fan point, stored as a vertex
    bool center_override = false;   // center supplied by input rather than centroid
    std::vector<int> triangle_ids;  // fan simplexes, one per polygon edge
};

struct Triangle {
    int id = -1;
    int cell_id = -1;
    std::array<int, 3> vertex_ids{};  // (center, corner_i, corner_{i+1}), CCW
    int primal_edge = -1;
    std::array<int, 2> dual_edges{};
};

struct Edge {
    int id = -1;
    EdgeKind kind = EdgeKind::Primal;
    std::array<int, 2> vertex_ids{};    // endpoint ids, lower id first
    std::array<int, 2> triangle_ids{};  // ascending; [1] = -1 on boundary
    Vec2 normal{};                      // unit; t0 -> t1, or outward on boundary
    double length = 0.0;
    bool boundary = false;
    int space_index = -1;  // index within the edges of the same kind
};

struct StaggeredMesh {
    std::vector<Vec2> vertices;  // primal vertices first, then cell centers
    int n_primal_vertices = 0;
    std::vector<PrimalCell> cells;
    std::vector<Triangle> triangles;
    std::vector<Edge> edges;
    std::vector<int> primal_edge_ids;  // in edge-id order
    std::vector<int> dual_edge_ids;
    double h = 0.0;  // max triangle diameter
    std::optional<Rect> domain;

    int n_primal_edges() const { return static_cast<int>(primal_edge_ids.size()); }
    int n_dual_edges() const { return static_cast<int>(dual_edge_ids.size()); }
    Vec2 triangle_vertex(int tid, int k) const {
        return vertices[triangles[tid].vertex_ids[k]];
    }
};

struct RegularityReport {
    double rho_edge = 0.0;  // min over cells of (min cell-edge length / cell diameter)
    double rho_star = 0.0;  // min over simplexes of (inradius / diameter)
    bool pass = false;      // both ratios >= the requested threshold
};

// Input description of one polygonal cell.
struct CellSpec {
    std::vector<int> vertex_ids;       // CCW
    std::optional<Vec2> center;        // fan point override; default = centroid
};

// n x n grid of square cells over `domain` (must be square cells; the
// acceptance domains are unit squares). Cell centers are the square centers.
StaggeredMesh build_square_mesh(int n, const Rect& domain);

// General polygonal primal mesh. Hanging nodes must be listed as (collinear)
// polygon vertices by every touching cell. Throws numeric_error when a cell
// is not star-shaped w.r.t. its fan point, config_error on malformed input.
StaggeredMesh build_polygonal_mesh(const std::vector<Vec2>& vertices,
                                   const std::vector<CellSpec>& cells);

// Randomly displace interior primal vertices by offsets uniform in
// [-delta*h, delta*h]^2 (h = source mesh size), recompute centers, rebuild.
// Retries with fresh offsets (and then reduced delta) until the result passes
// validate_regularity at `rho`; throws numeric_error when that fails.
StaggeredMesh perturb_mesh(const StaggeredMesh& mesh, double delta,
                           std::uint64_t seed, double rho = 0.05);

RegularityReport validate_regularity(const StaggeredMesh& mesh, double rho);

// Structural invariants: edge partition, adjacency counts, triangle edge
// composition, orientation, and normal conventions. Throws on violation.
void validate_structure(const StaggeredMesh& mesh);

// Plain-text mesh files: {"vertices": [[x,y],...],
//                         "cells": [{"vertices": [...], "center": [x,y]}]}
// with 0-based indices; "center" is optional per cell.
StaggeredMesh read_mesh(const std::string& path);
void write_mesh(const StaggeredMesh& mesh, const std::string& path);

}  // namespace sdg
