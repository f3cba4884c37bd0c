#include "sdg/manufactured.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "sdg/bessel.hpp"
#include "sdg/errors.hpp"

namespace sdg {

namespace {

const Complex kI{0.0, 1.0};

// Wires the derived fields (p, volume_load, div_p, boundary_datum) from u,
// grad_u and f; every solution follows the same mixed-form conventions.
void finish(ManufacturedSolution& s) {
    const double kappa = s.kappa;
    const auto grad = s.grad_u;
    const auto u = s.u;
    const auto f = s.f;
    s.p = [grad, kappa](Vec2 x) {
        const CVec2 g = grad(x);
        const Complex factor = kI / kappa;  // -1/(i kappa) = i/kappa
        return CVec2{factor * g.x, factor * g.y};
    };
    s.volume_load = [f, kappa](Vec2 x) { return f(x) / (kI * kappa); };
    const auto load = s.volume_load;
    s.div_p = [load, u, kappa](Vec2 x) { return load(x) - kI * kappa * u(x); };
    const auto p = s.p;
    s.boundary_datum = [p, u](Vec2 x, Vec2 n) {
        const CVec2 q = p(x);
        return -(q.x * n.x + q.y * n.y) + u(x);
    };
}

}  // namespace

ManufacturedSolution example1(double kappa) {
    if (!(kappa > 0.0)) throw config_error("example1: kappa must be positive");
    ManufacturedSolution s;
    s.name = "ex1";
    s.kappa = kappa;
    s.domain = Rect{-0.5, -0.5, 0.5, 0.5};

    const double j0 = bessel_j(0.0, kappa);
    const double j1 = bessel_j(1.0, kappa);
    const Complex c = std::exp(kI * kappa) / (kappa * Complex{j0, j1});

    s.u = [kappa, c](Vec2 v) {
        const double r = norm(v);
        return Complex{std::cos(kappa * r) / kappa, 0.0} -
               c * bessel_j(0.0, kappa * r);
    };
    s.grad_u = [kappa, c](Vec2 v) {
        const double r = norm(v);
        // du/dr = -sin(kr) + c k J_1(kr); both vanish like O(r) at the center.
        if (r < 1e-9) {
            const Complex slope = -kappa * kappa + 0.5 * c * kappa * kappa;
            return CVec2{slope * v.x, slope * v.y};  // (du/dr)/r * (x, y)
        }
        const Complex dudr =
            -std::sin(kappa * r) + c * kappa * bessel_j(1.0, kappa * r);
        return CVec2{dudr * v.x / r, dudr * v.y / r};
    };
    s.f = [kappa](Vec2 v) {
        const double kr = kappa * norm(v);
        if (kr < 1e-4)
            return Complex{kappa * (1.0 - kr * kr / 6.0 * (1.0 - kr * kr / 20.0)), 0.0};
        return Complex{kappa * std::sin(kr) / kr, 0.0};
    };
    finish(s);
    return s;
}

ManufacturedSolution example2(double kappa, double xi) {
    if (!(kappa > 0.0)) throw config_error("example2: kappa must be positive");
    if (!(xi > 0.0) || xi > 3.0) throw config_error("example2: xi out of range (0,3]");
    ManufacturedSolution s;
    s.name = "ex2";
    s.kappa = kappa;
    s.xi = xi;
    s.domain = Rect{0.0, -0.5, 1.0, 0.5};

    s.u = [kappa, xi](Vec2 v) {
        const double r = norm(v);
        const double theta = std::atan2(v.y, v.x);
        return Complex{bessel_j(xi, kappa * r) * std::cos(xi * theta), 0.0};
    };
    s.grad_u = [kappa, xi](Vec2 v) {
        const double r = norm(v);
        if (r < 1e-14) {
            if (xi < 1.0) {
                const double inf = std::numeric_limits<double>::infinity();
                return CVec2{Complex{inf, 0.0}, Complex{inf, 0.0}};  // flagged singular
            }
            if (xi == 1.0) return CVec2{Complex{0.5 * kappa, 0.0}, Complex{0.0, 0.0}};
            return CVec2{Complex{0.0, 0.0}, Complex{0.0, 0.0}};
        }
        const double theta = std::atan2(v.y, v.x);
        const double ct = std::cos(theta), st = std::sin(theta);
        const double ur = kappa * bessel_j_prime(xi, kappa * r) * std::cos(xi * theta);
        const double ut_r = -(xi / r) * bessel_j(xi, kappa * r) * std::sin(xi * theta);
        return CVec2{Complex{ur * ct - ut_r * st, 0.0},
                     Complex{ur * st + ut_r * ct, 0.0}};
    };
    s.f = [](Vec2) { return Complex{0.0, 0.0}; };
    if (xi != std::round(xi)) s.singular_point = Vec2{0.0, 0.0};
    finish(s);
    return s;
}

namespace {

// Coefficient grid c[a][b] for u = sum c_ab x^a y^b with a deterministic
// pattern that keeps all partial derivatives nontrivial and complex.
std::vector<std::vector<Complex>> poly_coefficients(int degree) {
    std::vector<std::vector<Complex>> c(degree + 1,
                                        std::vector<Complex>(degree + 1, Complex{}));
    for (int a = 0; a <= degree; ++a)
        for (int b = 0; a + b <= degree; ++b)
            c[a][b] = Complex{1.0 + a - 0.5 * b, 0.75 - 0.25 * a + 0.5 * b} /
                      static_cast<double>(1 + a + b);
    return c;
}

Complex poly_eval(const std::vector<std::vector<Complex>>& c, double x, double y) {
    Complex acc{0.0, 0.0};
    const int n = static_cast<int>(c.size()) - 1;
    for (int a = n; a >= 0; --a) {
        Complex row{0.0, 0.0};
        for (int b = n; b >= 0; --b) row = row * y + c[a][b];
        acc = acc * x + row;
    }
    return acc;
}

std::vector<std::vector<Complex>> poly_dx(const std::vector<std::vector<Complex>>& c) {
    std::vector<std::vector<Complex>> d(c.size(), std::vector<Complex>(c.size(), Complex{}));
    for (std::size_t a = 1; a < c.size(); ++a)
        for (std::size_t b = 0; b < c.size(); ++b)
            d[a - 1][b] = static_cast<double>(a) * c[a][b];
    return d;
}

std::vector<std::vector<Complex>> poly_dy(const std::vector<std::vector<Complex>>& c) {
    std::vector<std::vector<Complex>> d(c.size(), std::vector<Complex>(c.size(), Complex{}));
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = 1; b < c.size(); ++b)
            d[a][b - 1] = static_cast<double>(b) * c[a][b];
    return d;
}

}  // namespace

ManufacturedSolution polynomial_solution(int degree, double kappa, Rect domain) {
    if (degree < 0 || degree > 6)
        throw config_error("polynomial_solution: degree out of range [0,6]");
    if (!(kappa > 0.0)) throw config_error("polynomial_solution: kappa must be positive");
    ManufacturedSolution s;
    s.name = "poly" + std::to_string(degree);
    s.kappa = kappa;
    s.domain = domain;

    const auto c = poly_coefficients(degree);
    const auto cx = poly_dx(c), cy = poly_dy(c);
    const auto lap = [&] {
        auto cxx = poly_dx(cx);
        const auto cyy = poly_dy(cy);
        for (std::size_t a = 0; a < cxx.size(); ++a)
            for (std::size_t b = 0; b < cxx.size(); ++b) cxx[a][b] += cyy[a][b];
        return cxx;
    }();

    s.u = [c](Vec2 v) { return poly_eval(c, v.x, v.y); };
    s.grad_u = [cx, cy](Vec2 v) {
        return CVec2{poly_eval(cx, v.x, v.y), poly_eval(cy, v.x, v.y)};
    };
    s.f = [lap, c, kappa](Vec2 v) {
        return -poly_eval(lap, v.x, v.y) - kappa * kappa * poly_eval(c, v.x, v.y);
    };
    finish(s);
    return s;
}

}  // namespace sdg
