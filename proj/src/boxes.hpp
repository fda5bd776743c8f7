#pragma once

#include <vector>

#include "conjugates.hpp"
#include "interval.hpp"
#include "oracle.hpp"

namespace garsia {

// One coordinate axis: beta1 or a conjugate component. Complex conjugates
// contribute two axes (real part first, then imaginary part).
struct AxisInfo {
    int conj_index = -1; // -1 = beta1 axis
    bool from_complex = false;
    bool imag_part = false;
    Interval real_value;    // real axes
    ComplexInterval cvalue; // complex axes (shared by the Re and Im axis)
    Interval mod;           // |beta| over the parameter rectangle
};

struct CoordinateLayout {
    std::vector<AxisInfo> axes; // beta1 first, then conjugates in system order
    int dimension() const { return static_cast<int>(axes.size()); }
};

// Per-axis interval bounds for the digit-tail sums: tail_lo[n], tail_hi[n]
// enclose min/max over {0,1} tails of sum_{i>n} a_i * w_i, where w_i is the
// axis component of beta^-i. Truncated at depth N with the geometric
// remainder folded into `pad` on both ends.
struct AxisEnvelope {
    int N = 0;
    double pad = 0.0;
    double widen_unit = 0.0; // axis-scale epsilon used for depth-graded widening
    std::vector<Interval> weight;  // weight[i] for i = 1..n_max; weight[0] unused
    std::vector<Interval> tail_lo; // index n = 0..n_max
    std::vector<Interval> tail_hi;
};

struct TailEnvelope {
    int n_max = 0;
    std::vector<AxisEnvelope> axes;
};

struct Layout {
    CoordinateLayout coords;
    TailEnvelope envelope;
};

// Axis-aligned box whose endpoints carry interval uncertainty. The outer hull
// always contains the exact box; the inner hull is contained in it.
struct BoxEndpoints {
    std::vector<Interval> lo, hi;
};

struct Box {
    std::vector<double> lo, hi;
    bool contains_point(const std::vector<double>& pt) const;
    bool contains_box(const Box& other) const;
    bool intersects(const Box& other) const;
};

Box outer_box(const BoxEndpoints& e);
Box inner_box(const BoxEndpoints& e, bool* valid); // valid=false if some axis collapses

// Builds coordinate layout and tail envelopes for word lengths up to n_max.
// tail_N = 0 selects the truncation depth per axis so the pad is below
// machine resolution relative to the axis scale; an explicit tail_N must be
// >= n_max. `halfwidths` (one entry per axis, layout order) widens the
// parameter values into a rectangle; nullptr means the point system.
Layout build_layout(const ConjugateSystem& sys, int tail_N, int n_max,
                    const std::vector<double>* halfwidths = nullptr);

// The bounding region I: the box of the empty word.
BoxEndpoints bounding_region(const Layout& layout);

// Image box of a digit word: per axis, the fixed partial sum plus the
// depth-n tail envelope. Endpoint uncertainty is widened outward by a
// depth-graded few-epsilon slack so that shorter words' boxes strictly
// contain their extensions' despite floating-point reassociation.
BoxEndpoints word_box(const Word& a, const Layout& layout);

// Widening slack (in multiples of widen_unit) applied at word length n.
int widen_steps(int n, int n_max);
Interval widen_endpoint(Interval e, int steps, double unit);

} // namespace garsia
