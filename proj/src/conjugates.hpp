#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "int_poly.hpp"
#include "roots.hpp"

namespace garsia {

enum class ConjugateKind { RealPositive, RealNegative, Complex };

struct Conjugate {
    ConjugateKind kind;
    std::complex<double> value; // Im > 0 for Complex entries
    double radius = 0.0;        // inclusion radius inherited from root finding
};

// beta1 in (1,2) plus the selected Galois conjugates of modulus > 1, one
// representative per complex-conjugate pair. Free systems (no source
// polynomial) are used for parameter-space scans.
struct ConjugateSystem {
    double beta1 = 0.0;
    double beta1_radius = 0.0;
    std::vector<Conjugate> conjugates;
    std::optional<IntPolynomial> source;
    std::vector<std::string> warnings;

    // Ambient coordinate dimension: one axis per real value, two per complex
    // representative. Coincides with the free-parameter count.
    int dimension() const {
        int d = 1;
        for (const Conjugate& c : conjugates) d += (c.kind == ConjugateKind::Complex) ? 2 : 1;
        return d;
    }
};

// All conjugates of modulus > 1; modulus-1 roots within the detection band
// are excluded without error. beta1_index = -1 takes the unique root in
// (1,2); several roots there make the choice ambiguous and require an index.
ConjugateSystem select_conjugates(const IntPolynomial& p, const RootSet& rs,
                                  int beta1_index = -1);

// Explicit selection. `indices` address rs.roots; a negative-imaginary index
// is replaced by its representative.
ConjugateSystem select_conjugates(const IntPolynomial& p, const RootSet& rs,
                                  std::span<const int> indices, int beta1_index);

// System at explicitly given parameter values (no polynomial attached).
ConjugateSystem make_free_system(double beta1, std::span<const std::complex<double>> conjugates);

// Maps a real conjugate to the > 1 representative with equal H_n:
// b2 if b2 > 1, 1/b2 if 0 < b2 < 1, -1/b2 if -1 < b2 < 0, -b2 if b2 < -1.
double normalize_conjugate(double b2);

} // namespace garsia
