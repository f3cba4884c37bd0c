#include "sdg/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sdg {

namespace {

const long double kPi = 3.14159265358979323846264338327950288L;

// Ascending power series, extended precision with compensated summation.
long double series_j(long double nu, long double x) {
    const long double half = 0.5L * x;
    long double term = std::expl(nu * std::logl(half) - std::lgammal(nu + 1.0L));
    const long double q = half * half;
    long double sum = term, comp = 0.0L;
    for (int k = 1; k <= 300; ++k) {
        term *= -q / (static_cast<long double>(k) * (nu + k));
        const long double y = term - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::fabsl(term) < 1e-25L * (std::fabsl(sum) + 1e-30L)) break;
    }
    return sum;
}

// Hankel large-argument expansion J_nu ~ sqrt(2/(pi x)) (P cos X - Q sin X),
// X = x - (nu/2 + 1/4) pi, truncated at the smallest term.
long double asymptotic_j(long double nu, long double x) {
    const long double mu = 4.0L * nu * nu;
    long double c = 1.0L;  // c_m = (nu, m) / (2x)^m, signed
    long double p = 1.0L, q = 0.0L;
    long double prev = std::fabsl(c);
    for (int m = 1; m <= 60; ++m) {
        const long double j2 = 2.0L * m - 1.0L;
        c *= (mu - j2 * j2) / (8.0L * m * x);
        if (std::fabsl(c) >= prev) break;  // past optimal truncation
        prev = std::fabsl(c);
        const int cycle = m % 4;  // sign (-1)^k with m = 2k or 2k+1
        const long double s = (cycle == 2 || cycle == 3) ? -1.0L : 1.0L;
        if (m % 2 == 0)
            p += s * c;
        else
            q += s * c;
        if (prev < 1e-21L) break;
    }
    const long double chi = x - (0.5L * nu + 0.25L) * kPi;
    return std::sqrtl(2.0L / (kPi * x)) *
           (p * std::cosl(chi) - q * std::sinl(chi));
}

bool is_half_integer(double nu) {
    const double two = 2.0 * nu;
    return std::abs(two - std::round(two)) < 1e-12 &&
           std::abs(two / 2.0 - std::round(nu)) > 0.25;
}

long double half_integer_j(double nu, long double x) {
    const long double pre = std::sqrtl(2.0L / (kPi * x));
    const long double s = std::sinl(x), c = std::cosl(x);
    const int twice = static_cast<int>(std::lround(2.0 * nu));
    switch (twice) {
        case 1:  // J_{1/2}
            return pre * s;
        case 3:  // J_{3/2}
            return pre * (s / x - c);
        case 5:  // J_{5/2}
            return pre * ((3.0L / (x * x) - 1.0L) * s - 3.0L / x * c);
        case 7:  // J_{7/2}
            return pre * ((15.0L / (x * x * x) - 6.0L / x) * s -
                          (15.0L / (x * x) - 1.0L) * c);
        default:
            return series_j(nu, x);
    }
}

}  // namespace

double bessel_j(double nu, double x) {
    if (!(nu >= 0.0) || nu > 4.0)
        throw std::invalid_argument("bessel_j: order out of range [0,4]");
    if (!(x >= 0.0)) throw std::invalid_argument("bessel_j: negative argument");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    // Closed forms suffer cancellation as x -> 0; the series covers that end.
    if (is_half_integer(nu) && x >= 0.5)
        return static_cast<double>(half_integer_j(nu, x));
    if (x <= std::max(12.0, 2.0 * nu))
        return static_cast<double>(series_j(nu, x));
    return static_cast<double>(asymptotic_j(nu, x));
}

double bessel_j_prime(double nu, double x) {
    if (!(nu >= 0.0) || nu > 3.0)
        throw std::invalid_argument("bessel_j_prime: order out of range [0,3]");
    if (!(x >= 0.0)) throw std::invalid_argument("bessel_j_prime: negative argument");
    if (x == 0.0) {
        if (nu == 0.0) return 0.0;
        if (nu == 1.0) return 0.5;
        if (nu < 1.0) return std::numeric_limits<double>::infinity();  // singular
        return 0.0;
    }
    // J_nu' = (nu/x) J_nu - J_{nu+1}; keeps the order nonnegative.
    return (nu / x) * bessel_j(nu, x) - bessel_j(nu + 1.0, x);
}

}  // namespace sdg
