#include "roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "error.hpp"

namespace garsia {

namespace {

using cplx = std::complex<double>;
using cplxl = std::complex<long double>;

constexpr int kMaxIterations = 400;
constexpr double kEps = std::numeric_limits<double>::epsilon();

cplx horner(const std::vector<double>& c, cplx x) {
    cplx acc = 0.0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

cplx horner_deriv(const std::vector<double>& c, cplx x) {
    cplx acc = 0.0;
    for (size_t i = c.size(); i-- > 1;) acc = acc * x + c[i] * static_cast<double>(i);
    return acc;
}

// Extended-precision evaluation of the integer polynomial; the coefficients
// are exact in long double, so the evaluation error bound below is sharp.
cplxl horner_int(const std::vector<long long>& c, cplxl x) {
    cplxl acc = 0.0L;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + static_cast<long double>(c[i]);
    return acc;
}

cplxl horner_int_deriv(const std::vector<long long>& c, cplxl x) {
    cplxl acc = 0.0L;
    for (size_t i = c.size(); i-- > 1;)
        acc = acc * x + static_cast<long double>(c[i]) * static_cast<long double>(i);
    return acc;
}

long double eval_error_bound_ld(const std::vector<long long>& c, long double az) {
    long double s = 0.0L, pw = 1.0L;
    for (long long ci : c) {
        s += std::abs(static_cast<long double>(ci)) * pw;
        pw *= az;
    }
    return s * static_cast<long double>(2 * c.size()) *
           std::numeric_limits<long double>::epsilon();
}

} // namespace

RootSet find_roots(const IntPolynomial& p, double tol) {
    if (p.degree() < 1) fail(Status::DomainError, "find_roots requires degree >= 1");
    if (!(tol > 0.0)) fail(Status::BadArgument, "tolerance must be positive");

    // Strip roots at zero so the iteration only sees nonzero roots.
    std::vector<long long> cs = p.coeffs();
    int zero_roots = 0;
    while (cs.size() > 1 && cs.front() == 0) {
        cs.erase(cs.begin());
        ++zero_roots;
    }

    const int n = static_cast<int>(cs.size()) - 1;
    std::vector<double> mono(cs.size());
    const double lead = static_cast<double>(cs.back());
    for (size_t i = 0; i < cs.size(); ++i) mono[i] = static_cast<double>(cs[i]) / lead;

    std::vector<cplx> z(static_cast<size_t>(n));
    if (n >= 1) {
        // Cauchy bound on root moduli; start on a perturbed circle inside it.
        double bound = 0.0;
        for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(mono[static_cast<size_t>(i)]));
        double r0 = 0.8 * (1.0 + bound);
        for (int k = 0; k < n; ++k) {
            double theta = 2.0 * M_PI * k / n + 0.4;
            double rk = r0 * (1.0 + 0.02 * ((k % 5) - 2));
            z[static_cast<size_t>(k)] = std::polar(rk, theta);
        }
    }

    bool converged = (n == 0);
    for (int iter = 0; iter < kMaxIterations && !converged; ++iter) {
        double worst = 0.0;
        for (int k = 0; k < n; ++k) {
            cplx zk = z[static_cast<size_t>(k)];
            cplx pv = horner(mono, zk);
            if (pv == 0.0) continue;
            cplx dv = horner_deriv(mono, zk);
            cplx w = (dv != 0.0) ? pv / dv : cplx(1e-3, 1e-3);
            cplx s = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != k) s += 1.0 / (zk - z[static_cast<size_t>(j)]);
            cplx denom = 1.0 - w * s;
            cplx corr = (std::abs(denom) > 1e-300) ? w / denom : w;
            z[static_cast<size_t>(k)] = zk - corr;
            worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(zk)));
        }
        converged = worst < 4.0 * kEps;
    }

    // Newton polish in extended precision, then a posteriori radii.
    std::vector<Root> roots;
    roots.reserve(static_cast<size_t>(n) + static_cast<size_t>(zero_roots));
    double max_residual = 0.0;
    for (int k = 0; k < n; ++k) {
        cplxl zk(z[static_cast<size_t>(k)].real(), z[static_cast<size_t>(k)].imag());
        for (int step = 0; step < 4; ++step) {
            cplxl pv = horner_int(cs, zk);
            cplxl dv = horner_int_deriv(cs, zk);
            if (dv == cplxl(0.0L)) break;
            cplxl corr = pv / dv;
            if (std::abs(corr) > 0.5L * (1.0L + std::abs(zk))) break;
            zk -= corr;
        }
        cplx zd(static_cast<double>(zk.real()), static_cast<double>(zk.imag()));
        cplxl pv = horner_int(cs, cplxl(zd.real(), zd.imag()));
        cplxl dv = horner_int_deriv(cs, cplxl(zd.real(), zd.imag()));
        double radius;
        if (dv == cplxl(0.0L)) {
            radius = std::numeric_limits<double>::infinity();
        } else {
            // Smith's inclusion disk, inflated by the evaluation error bound.
            long double num = std::abs(pv) + eval_error_bound_ld(cs, std::abs(zk));
            radius = static_cast<double>(static_cast<long double>(n) * num / std::abs(dv));
            radius = std::max(radius, 2.0 * kEps * (1.0 + std::abs(zd)));
        }
        max_residual = std::max(max_residual, static_cast<double>(std::abs(pv)) / std::abs(lead));
        roots.push_back(Root{zd, radius, -1, false});
    }
    for (int k = 0; k < zero_roots; ++k) roots.push_back(Root{0.0, 0.0, -1, false});

    for (const Root& r : roots)
        if (!(r.radius <= tol))
            fail(Status::NoConvergence,
                 "root inclusion radius " + std::to_string(r.radius) + " exceeds tolerance");

    // Real snapping: integer polynomials have real coefficients, so roots with
    // an imaginary part below the certified radius are taken as real.
    for (Root& r : roots)
        if (std::abs(r.value.imag()) <= std::max(r.radius, 32.0 * kEps * (1.0 + std::abs(r.value))))
            r.value = cplx(r.value.real(), 0.0);

    // Pair complex roots with their conjugates and symmetrize each pair.
    std::vector<Root> reals, pairs;
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        if (roots[i].value.imag() == 0.0) {
            used[i] = true;
            reals.push_back(roots[i]);
            continue;
        }
        size_t best = i;
        double best_dist = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < roots.size(); ++j) {
            if (j == i || used[j] || roots[j].value.imag() == 0.0) continue;
            double d = std::abs(roots[j].value - std::conj(roots[i].value));
            if (d < best_dist) {
                best_dist = d;
                best = j;
            }
        }
        if (best == i || best_dist > 2.0 * (roots[i].radius + roots[best].radius) + 1e-12)
            fail(Status::NoConvergence, "could not pair complex-conjugate roots");
        used[i] = used[best] = true;
        cplx rep = 0.5 * (roots[i].value + std::conj(roots[best].value));
        if (rep.imag() < 0.0) rep = std::conj(rep);
        double rad = std::max(roots[i].radius, roots[best].radius);
        pairs.push_back(Root{rep, rad, -1, false});
    }

    std::sort(reals.begin(), reals.end(),
              [](const Root& a, const Root& b) { return a.value.real() > b.value.real(); });
    std::sort(pairs.begin(), pairs.end(), [](const Root& a, const Root& b) {
        double ma = std::abs(a.value), mb = std::abs(b.value);
        if (ma != mb) return ma > mb;
        return a.value.real() > b.value.real();
    });

    RootSet rs;
    rs.tol = tol;
    rs.max_residual = max_residual;
    for (const Root& r : reals) rs.roots.push_back(r);
    for (const Root& r : pairs) {
        int idx = static_cast<int>(rs.roots.size());
        Root rep = r;
        rep.conj_pair = idx + 1;
        Root other = r;
        other.value = std::conj(r.value);
        other.conj_pair = idx;
        rs.roots.push_back(rep);
        rs.roots.push_back(other);
    }
    for (Root& r : rs.roots) r.unit_modulus = std::abs(std::abs(r.value) - 1.0) < 10.0 * tol;
    return rs;
}

} // namespace garsia
