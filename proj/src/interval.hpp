#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace garsia {

// Closed interval with outward rounding: every operation widens the result by
// one ulp per rounded bound, so computed intervals always contain the exact
// real-arithmetic result.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    static Interval point(double v) { return {v, v}; }
    static Interval around(double v, double radius) {
        return {down(v - radius), up(v + radius)};
    }

    static double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }
    static double down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double v) const { return lo <= v && v <= hi; }
};

inline Interval operator+(Interval a, Interval b) {
    return {Interval::down(a.lo + b.lo), Interval::up(a.hi + b.hi)};
}

inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

inline Interval operator-(Interval a, Interval b) { return a + (-b); }

inline Interval operator*(Interval a, Interval b) {
    double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    double lo = std::min(std::min(p1, p2), std::min(p3, p4));
    double hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {Interval::down(lo), Interval::up(hi)};
}

// Reciprocal of an interval not containing zero.
inline Interval recip(Interval a) {
    double lo = std::min(1.0 / a.lo, 1.0 / a.hi);
    double hi = std::max(1.0 / a.lo, 1.0 / a.hi);
    return {Interval::down(lo), Interval::up(hi)};
}

inline Interval operator/(Interval a, Interval b) { return a * recip(b); }

inline Interval max0(Interval a) { return {std::max(a.lo, 0.0), std::max(a.hi, 0.0)}; }
inline Interval min0(Interval a) { return {std::min(a.lo, 0.0), std::min(a.hi, 0.0)}; }

inline Interval abs_i(Interval a) {
    if (a.lo >= 0.0) return a;
    if (a.hi <= 0.0) return -a;
    return {0.0, std::max(-a.lo, a.hi)};
}

inline Interval sqrt_i(Interval a) {
    double lo = (a.lo > 0.0) ? Interval::down(std::sqrt(a.lo)) : 0.0;
    return {std::max(lo, 0.0), Interval::up(std::sqrt(a.hi))};
}

struct ComplexInterval {
    Interval re, im;

    static ComplexInterval point(std::complex<double> z) {
        return {Interval::point(z.real()), Interval::point(z.imag())};
    }
    static ComplexInterval around(std::complex<double> z, double r_re, double r_im) {
        return {Interval::around(z.real(), r_re), Interval::around(z.imag(), r_im)};
    }
};

inline ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline Interval norm_sq(const ComplexInterval& z) { return z.re * z.re + z.im * z.im; }

inline Interval modulus(const ComplexInterval& z) { return sqrt_i(norm_sq(z)); }

// 1/z = conj(z) / |z|^2; requires |z| bounded away from zero.
inline ComplexInterval recip(const ComplexInterval& z) {
    Interval n = norm_sq(z);
    return {z.re / n, (-z.im) / n};
}

} // namespace garsia
