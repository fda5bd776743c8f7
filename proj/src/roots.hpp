#pragma once

#include <complex>
#include <vector>

#include "int_poly.hpp"

namespace garsia {

struct Root {
    std::complex<double> value;
    double radius = 0.0;   // certified inclusion radius (absolute)
    int conj_pair = -1;    // index of the complex-conjugate partner, -1 for real roots
    bool unit_modulus = false; // | |z| - 1 | below the detection band
};

struct RootSet {
    std::vector<Root> roots;
    double tol = 0.0;          // requested radius bound
    double max_residual = 0.0; // max |p(z)| over returned roots
};

inline constexpr double kDefaultRootTol = 1e-10;

// All complex roots of p via Aberth-Ehrlich simultaneous iteration from a
// perturbed-circle start, Newton-polished, with a posteriori inclusion radii
// degree * |p(z)/p'(z)|. Roots are ordered: real roots by descending value,
// then complex-conjugate pairs by descending modulus with the Im > 0
// representative first and its partner immediately after.
// Requires degree >= 1 and simple roots (minimal polynomials qualify).
RootSet find_roots(const IntPolynomial& p, double tol = kDefaultRootTol);

} // namespace garsia
