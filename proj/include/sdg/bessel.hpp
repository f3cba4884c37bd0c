#pragma once

namespace sdg {

// Bessel function of the first kind J_nu(x) for real order nu in [0, 4] and
// x in [0, 500], accurate to ~1e-12 relative away from zeros of J_nu.
// Ascending series for small x, large-argument (Hankel) expansion beyond the
// switchover, closed forms for half-integer orders.
double bessel_j(double nu, double x);

// d/dx J_nu(x). For 0 < nu < 1 the derivative diverges at x = 0; the
// singular case is flagged by returning +infinity.
double bessel_j_prime(double nu, double x);

}  // namespace sdg
