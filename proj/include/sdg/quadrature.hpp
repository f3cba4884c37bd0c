#pragma once

#include <array>
#include <vector>

#include "sdg/geometry.hpp"

namespace sdg {

// Quadrature rule on the reference triangle {(0,0),(1,0),(0,1)}.
// Weights are positive and sum to the reference area 1/2.
struct TriQuadRule {
    int exact_degree = 0;
    std::vector<Vec2> points;     // reference coordinates
    std::vector<double> weights;  // sum = 1/2
};

// Quadrature rule on the reference edge [-1, 1]. Weights sum to 2.
struct EdgeQuadRule {
    int exact_degree = 0;
    std::vector<double> points;
    std::vector<double> weights;
};

// Rule mapped to a physical triangle; weights sum to the triangle area.
struct MappedQuad {
    std::vector<Vec2> points;
    std::vector<double> weights;
};

// Gauss-Legendre rule on [-1,1], exact for polynomials of degree <= degree.
// degree in [0, 50].
EdgeQuadRule edge_quadrature(int degree);

// Conical-product rule exact for bivariate polynomials of total degree
// <= degree on the reference triangle. All points interior, weights positive.
// degree in [0, 50].
TriQuadRule tri_quadrature(int degree);

// Uniform composite refinement: base rule replicated on 4^levels congruent
// sub-triangles of the reference triangle.
TriQuadRule composite_tri_quadrature(const TriQuadRule& base, int levels);

// Map a reference rule to the physical triangle (a, b, c).
MappedQuad map_to_triangle(const TriQuadRule& rule, Vec2 a, Vec2 b, Vec2 c);

// Map a reference edge rule to the physical segment [p0, p1].
// Weights sum to the segment length.
MappedQuad map_to_segment(const EdgeQuadRule& rule, Vec2 p0, Vec2 p1);

// Composite rule on (a, b, c) graded geometrically toward vertex a with ratio
// 1/2 over `levels` annular shells. Intended for integrands with an
// integrable singularity at vertex a; all points stay strictly inside.
MappedQuad map_graded_corner(const TriQuadRule& base, Vec2 a, Vec2 b, Vec2 c,
                             int levels);

// Composite rule on segment [p0, p1] graded toward p0 (singular endpoint).
MappedQuad map_graded_segment(const EdgeQuadRule& base, Vec2 p0, Vec2 p1,
                              int levels);

}  // namespace sdg
