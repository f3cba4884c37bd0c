#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "sdg/geometry.hpp"

namespace sdg {

using Complex = std::complex<double>;

struct CVec2 {
    Complex x{0.0, 0.0};
    Complex y{0.0, 0.0};
};

// Closed-form reference solution of -Lap u - kappa^2 u = f with impedance
// boundary data, carried in both second-order and first-order (mixed) form:
//   p = -grad u / (i kappa),  div p + i kappa u = volume_load = f/(i kappa),
//   boundary_datum = -p.n + u on the domain boundary.
struct ManufacturedSolution {
    std::string name;
    double kappa = 1.0;
    double xi = 0.0;  // corner exponent for the wedge family, 0 otherwise
    Rect domain;
    std::function<Complex(Vec2)> u;
    std::function<CVec2(Vec2)> grad_u;
    std::function<CVec2(Vec2)> p;
    std::function<Complex(Vec2)> f;            // -Lap u - kappa^2 u
    std::function<Complex(Vec2)> volume_load;  // f / (i kappa)
    std::function<Complex(Vec2)> div_p;        // volume_load - i kappa u
    std::function<Complex(Vec2, Vec2)> boundary_datum;  // (point, outward normal)
    std::optional<Vec2> singular_point;  // gradient singularity (graded quadrature)
};

// Radial wave on [-0.5, 0.5]^2: u = cos(kr)/k - c J_0(kr) with the constant
// chosen so the impedance datum stays bounded; f = sin(kr)/r.
ManufacturedSolution example1(double kappa);

// Bessel wedge mode on (0,1) x (-0.5, 0.5): u = J_xi(kr) cos(xi theta) with
// polar coordinates about the midpoint of the left edge; f = 0. Non-integer
// xi yields a gradient singularity r^{xi-1} at the origin.
ManufacturedSolution example2(double kappa, double xi);

// Complex polynomial of total degree `degree` (fixed coefficient table) for
// patch tests; all data computed symbolically.
ManufacturedSolution polynomial_solution(int degree, double kappa, Rect domain);

}  // namespace sdg
