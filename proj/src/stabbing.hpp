#pragma once

#include <utility>
#include <vector>

#include "boxes.hpp"
#include "conjugates.hpp"

namespace garsia {

// Flat box storage: lo[axis][i], hi[axis][i].
struct BoxArray {
    int dim = 0;
    size_t count = 0;
    std::vector<std::vector<double>> lo, hi;
};

struct StabbingResult {
    long long depth = 0;
    std::vector<double> witness;                 // a point in a maximal cell
    std::vector<std::pair<double, double>> cell; // the maximal cell found
    double margin = 0.0;                         // min cell width across axes
};

// Maximum number of boxes sharing an arrangement cell of dimension >= 1, by
// the recursive coordinate-slab sweep: sort axis endpoints, keep the boxes
// covering each slab, recurse on the remaining axes. Boxes are closed;
// configurations meeting only at an isolated vertex (every axis pinched to a
// shared endpoint) do not count, but those with at least one positive-width
// axis do. Word collisions always produce identical boxes, so every
// collision cluster is counted at full multiplicity.
//
// min_cell_width (one entry per axis, optional) is the endpoint-uncertainty
// scale: gaps at or below it are not treated as positive width, and endpoint
// values within it are treated as shared. With that threshold between the
// floating-point error and the smallest genuine cell width, the sweep
// reproduces exact-arithmetic results.
StabbingResult max_stabbing_depth(const BoxArray& boxes);
StabbingResult max_stabbing_depth(const BoxArray& boxes,
                                  const std::vector<double>& min_cell_width);

struct DepthResult {
    int n = 0;
    long long mn = 0;
    double ln = 0.0;    // n log 2 - log mn
    double ratio = 0.0; // ln / (n log beta1)
    double margin = 0.0;
    std::vector<double> witness;
    Box witness_cell; // maximal cell; reusable as a seed region
};

// m_n over all 2^n word boxes of the system. ratio > 1 is the dimension-one
// certificate (subject to the interval check in certify_region).
DepthResult compute_mn(const ConjugateSystem& sys, int n, int tail_N = 0);

struct BestBound {
    DepthResult best;
    int first_certifying_n = 0; // 0 = none
};

// Runs compute_mn for n = 1..n_max with early exit on ratio > 1.
BestBound best_bound(const ConjugateSystem& sys, int n_max, int tail_N = 0);

struct CertifiedDepth {
    long long m_lower = 0;
    long long m_upper = 0;
    bool certified = false;  // m_n is constant on the rectangle
    double ln_constant = 0.0; // valid when certified
};

// Recomputes every endpoint over the parameter rectangle (center = system
// values, halfwidths per axis): m_upper counts overlaps that possibly occur,
// m_lower those certain to occur.
CertifiedDepth certify_region(const ConjugateSystem& sys, const std::vector<double>& halfwidths,
                              int n, int tail_N = 0);

// Lower bound for m_n counting only children of length-(n-1) words whose
// boxes meet a seed region. Valid for showing a given n insufficient; never
// a substitute for compute_mn when certifying.
long long seeded_mn_lower_bound(const ConjugateSystem& sys, int n, const std::vector<Box>& seeds,
                                int tail_N = 0);

} // namespace garsia
