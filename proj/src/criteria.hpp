#pragma once

#include <string>

#include "conjugates.hpp"
#include "int_poly.hpp"
#include "stabbing.hpp"

namespace garsia {

inline constexpr double kThresholdOriginal = 0.82;
inline constexpr double kThresholdImproved = 0.9804085;

enum class Method { None, Threshold, BoxBound };

struct Verdict {
    bool certified = false;
    Method method = Method::None;
    double value = 0.0; // threshold ratio r, or the box ratio L_n/(n log beta1)
    int n_used = 0;     // box method word length
    long long mn = 0;   // box method m_n
    bool threshold_domain_ok = true; // normalized conjugate inside (1,2)
    std::string details;
};

// Entropy-ratio criterion on a real conjugate: r = log(beta1)/|log|conj||
// certifies dimension one when r < threshold with margin beyond the
// propagated root-error radii. Requires |conj| away from {0,1} and the
// normalized conjugate inside (1,2).
Verdict threshold_criterion(double beta1, double conj, double threshold,
                            double beta1_radius = 0.0, double conj_radius = 0.0,
                            double unit_tol = kDefaultRootTol);

// Tries the threshold criterion on every real conjugate, then the box bound
// for n = 1..n_max (interval-checked at the root radii before certifying).
// Returns the first certifying verdict, else the best inconclusive bound.
Verdict dimension_report(const IntPolynomial& p, int n_max,
                         double threshold = kThresholdImproved, int tail_N = 0);

struct HeightCheckResult {
    bool needed = true;
    std::string note;
};

// Advisory: collisions require the minimal polynomial to divide some height-1
// polynomial. Height 1 itself qualifies; larger heights are conservatively
// flagged as "needed" unless the caller asserts the polynomial is the whole
// collision witness.
HeightCheckResult height_check(const IntPolynomial& p, bool assert_full_witness = false);

} // namespace garsia
