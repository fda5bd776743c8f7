#include "boxes.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace garsia {

namespace {

constexpr int kTailDepthCap = 8192;
constexpr int kTailDepthFloor = 64;

int auto_tail_depth(double mod_lo, int n_max) {
    // Smallest N with mod^-N below 2^-52, so the pad vanishes at machine
    // resolution relative to the axis scale 1/(mod-1).
    double need = 52.0 * std::log(2.0) / std::log(mod_lo);
    int n = static_cast<int>(std::ceil(need)) + 1;
    n = std::max(n, std::max(n_max + 1, kTailDepthFloor));
    return std::min(n, kTailDepthCap);
}

AxisEnvelope build_axis_envelope(const AxisInfo& axis, int tail_N, int n_max) {
    if (!(axis.mod.lo > 1.0))
        fail(Status::DomainError, "conjugate modulus must stay above 1 on the rectangle");
    const int N = (tail_N == 0) ? auto_tail_depth(axis.mod.lo, n_max) : tail_N;

    AxisEnvelope env;
    env.N = N;

    // Weights w_i = axis component of beta^-i, i = 1..N.
    std::vector<Interval> w(static_cast<size_t>(N) + 1);
    if (axis.from_complex) {
        // Iterated rectangular interval powers wrap and blow up over long
        // tails, so enclose z^-i directly: extended-precision point powers
        // of the rectangle center plus a disc bound i * r * mlo^-(i+1) for
        // the parameter spread and the accumulated multiplication error.
        using cld = std::complex<long double>;
        const long double eps_ld = std::numeric_limits<long double>::epsilon();
        cld center(static_cast<long double>(axis.cvalue.re.mid()),
                   static_cast<long double>(axis.cvalue.im.mid()));
        long double r_disc = std::hypot(0.5L * (axis.cvalue.re.hi - axis.cvalue.re.lo),
                                        0.5L * (axis.cvalue.im.hi - axis.cvalue.im.lo));
        long double mod_c = std::abs(center);
        long double mlo = mod_c - r_disc;
        if (!(mlo > 1.0L))
            fail(Status::DomainError, "conjugate modulus must stay above 1 on the rectangle");
        cld cinv = 1.0L / center;
        cld pw = cinv;
        long double mpow = 1.0L / mlo;
        for (int i = 1; i <= N; ++i) {
            long double err = static_cast<long double>(i) * (r_disc / mlo + 8.0L * eps_ld) * mpow;
            double e = static_cast<double>(err);
            w[static_cast<size_t>(i)] = axis.imag_part
                                            ? Interval::around(static_cast<double>(pw.imag()), e)
                                            : Interval::around(static_cast<double>(pw.real()), e);
            if (i < N) {
                pw *= cinv;
                mpow /= mlo;
            }
        }
    } else {
        Interval inv = recip(axis.real_value);
        Interval pw = inv;
        for (int i = 1; i <= N; ++i) {
            w[static_cast<size_t>(i)] = pw;
            if (i < N) pw = pw * inv;
        }
    }

    // pad >= sum_{i>N} |w_i|: geometric remainder |beta|^-N / (|beta|-1).
    Interval minv = recip(axis.mod);
    Interval mpow = Interval::point(1.0);
    for (int i = 0; i < N; ++i) mpow = mpow * minv;
    Interval one = Interval::point(1.0);
    env.pad = (mpow / (axis.mod - one)).hi;

    env.weight.assign(static_cast<size_t>(n_max) + 1, Interval{});
    for (int i = 1; i <= n_max; ++i) env.weight[static_cast<size_t>(i)] = w[static_cast<size_t>(i)];

    env.tail_lo.assign(static_cast<size_t>(n_max) + 1, Interval{});
    env.tail_hi.assign(static_cast<size_t>(n_max) + 1, Interval{});
    Interval acc_lo{-env.pad, -env.pad};
    Interval acc_hi{env.pad, env.pad};
    for (int i = N; i >= 1; --i) {
        acc_lo = min0(w[static_cast<size_t>(i)]) + acc_lo;
        acc_hi = max0(w[static_cast<size_t>(i)]) + acc_hi;
        if (i - 1 <= n_max) {
            env.tail_lo[static_cast<size_t>(i - 1)] = acc_lo;
            env.tail_hi[static_cast<size_t>(i - 1)] = acc_hi;
        }
    }

    // Every box endpoint on this axis lies inside the depth-0 envelope, so
    // one epsilon at its scale dominates an ulp anywhere on the axis.
    double scale = std::max({std::abs(env.tail_lo[0].lo), std::abs(env.tail_hi[0].hi), 1e-300});
    env.widen_unit = scale * std::numeric_limits<double>::epsilon();
    return env;
}

} // namespace

bool Box::contains_point(const std::vector<double>& pt) const {
    for (size_t a = 0; a < lo.size(); ++a)
        if (pt[a] < lo[a] || pt[a] > hi[a]) return false;
    return true;
}

bool Box::contains_box(const Box& other) const {
    for (size_t a = 0; a < lo.size(); ++a)
        if (other.lo[a] < lo[a] || other.hi[a] > hi[a]) return false;
    return true;
}

bool Box::intersects(const Box& other) const {
    for (size_t a = 0; a < lo.size(); ++a)
        if (other.hi[a] < lo[a] || other.lo[a] > hi[a]) return false;
    return true;
}

Box outer_box(const BoxEndpoints& e) {
    Box b;
    b.lo.reserve(e.lo.size());
    b.hi.reserve(e.hi.size());
    for (size_t a = 0; a < e.lo.size(); ++a) {
        b.lo.push_back(e.lo[a].lo);
        b.hi.push_back(e.hi[a].hi);
    }
    return b;
}

Box inner_box(const BoxEndpoints& e, bool* valid) {
    Box b;
    bool ok = true;
    for (size_t a = 0; a < e.lo.size(); ++a) {
        b.lo.push_back(e.lo[a].hi);
        b.hi.push_back(e.hi[a].lo);
        if (b.lo.back() > b.hi.back()) ok = false;
    }
    if (valid) *valid = ok;
    return b;
}

Layout build_layout(const ConjugateSystem& sys, int tail_N, int n_max,
                    const std::vector<double>* halfwidths) {
    if (n_max < 0) fail(Status::BadArgument, "n_max must be >= 0");
    if (tail_N != 0 && tail_N < n_max)
        fail(Status::BadArgument, "tail depth N must be >= n_max");

    Layout layout;
    auto hw = [&](size_t axis_index) -> double {
        if (!halfwidths) return 0.0;
        if (axis_index >= halfwidths->size())
            fail(Status::BadArgument, "halfwidth vector shorter than the axis count");
        double h = (*halfwidths)[axis_index];
        if (h < 0.0) fail(Status::BadArgument, "halfwidths must be >= 0");
        return h;
    };

    AxisInfo b1;
    b1.conj_index = -1;
    b1.real_value = Interval::around(sys.beta1, sys.beta1_radius + hw(0));
    b1.mod = abs_i(b1.real_value);
    layout.coords.axes.push_back(b1);

    size_t param = 1;
    for (size_t ci = 0; ci < sys.conjugates.size(); ++ci) {
        const Conjugate& c = sys.conjugates[ci];
        if (c.kind == ConjugateKind::Complex) {
            ComplexInterval v = ComplexInterval::around(c.value, c.radius + hw(param),
                                                        c.radius + hw(param + 1));
            param += 2;
            AxisInfo re;
            re.conj_index = static_cast<int>(ci);
            re.from_complex = true;
            re.imag_part = false;
            re.cvalue = v;
            re.mod = modulus(v);
            AxisInfo im = re;
            im.imag_part = true;
            layout.coords.axes.push_back(re);
            layout.coords.axes.push_back(im);
        } else {
            AxisInfo ax;
            ax.conj_index = static_cast<int>(ci);
            ax.real_value = Interval::around(c.value.real(), c.radius + hw(param));
            ax.mod = abs_i(ax.real_value);
            layout.coords.axes.push_back(ax);
            param += 1;
        }
    }
    if (halfwidths && halfwidths->size() != param)
        fail(Status::BadArgument, "halfwidth vector longer than the axis count");

    layout.envelope.n_max = n_max;
    for (const AxisInfo& axis : layout.coords.axes)
        layout.envelope.axes.push_back(build_axis_envelope(axis, tail_N, n_max));
    return layout;
}

int widen_steps(int n, int n_max) { return 16 * (n_max - n) + 2; }

Interval widen_endpoint(Interval e, int steps, double unit) {
    double slack = steps * unit;
    return {Interval::down(e.lo - slack), Interval::up(e.hi + slack)};
}

BoxEndpoints bounding_region(const Layout& layout) { return word_box(Word{}, layout); }

BoxEndpoints word_box(const Word& a, const Layout& layout) {
    const int n = static_cast<int>(a.size());
    if (n > layout.envelope.n_max)
        fail(Status::DomainError, "word longer than the envelope depth");
    const int steps = widen_steps(n, layout.envelope.n_max);
    BoxEndpoints e;
    for (const AxisEnvelope& env : layout.envelope.axes) {
        Interval partial = Interval::point(0.0);
        for (int i = 1; i <= n; ++i)
            if (a[static_cast<size_t>(i - 1)]) partial = partial + env.weight[static_cast<size_t>(i)];
        e.lo.push_back(widen_endpoint(partial + env.tail_lo[static_cast<size_t>(n)], steps,
                                      env.widen_unit));
        e.hi.push_back(widen_endpoint(partial + env.tail_hi[static_cast<size_t>(n)], steps,
                                      env.widen_unit));
    }
    return e;
}

} // namespace garsia
