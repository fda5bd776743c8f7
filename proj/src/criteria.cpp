#include "criteria.hpp"

#include <cmath>
#include <cstdio>

#include "error.hpp"
#include "roots.hpp"

namespace garsia {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

} // namespace

Verdict threshold_criterion(double beta1, double conj, double threshold, double beta1_radius,
                            double conj_radius, double unit_tol) {
    if (!(beta1 > 1.0 && beta1 < 2.0))
        fail(Status::DomainError, "beta1 must lie in (1,2)");
    const double ac = std::abs(conj);
    if (ac == 0.0 || std::abs(ac - 1.0) <= 10.0 * unit_tol)
        fail(Status::Inapplicable, "criterion needs a real conjugate with modulus away from 0 and 1");

    const double normalized = normalize_conjugate(conj);
    const double lb = std::log(beta1);
    const double lc = std::abs(std::log(ac)); // = log(normalized)
    const double r = lb / lc;

    // First-order propagation of the inclusion radii into r.
    const double err = beta1_radius / (beta1 * lc) + lb * conj_radius / (ac * lc * lc);

    Verdict v;
    v.method = Method::Threshold;
    v.value = r;

    // The underlying entropy bound is stated for parameters in (1,2); the
    // normalized conjugate must stay inside with margin.
    const double norm_err = conj_radius / std::min(ac, 1.0);
    if (!(normalized - norm_err > 1.0 && normalized + norm_err < 2.0)) {
        v.threshold_domain_ok = false;
        v.details = "normalized conjugate " + fmt(normalized) + " outside (1,2); threshold bound not applicable";
        return v;
    }
    v.certified = (r + err < threshold);
    v.details = "r = log(" + fmt(beta1) + ")/|log|" + fmt(conj) + "|| = " + fmt(r) +
                (v.certified ? " < " : " >= ") + fmt(threshold);
    return v;
}

Verdict dimension_report(const IntPolynomial& p, int n_max, double threshold, int tail_N) {
    RootSet rs = find_roots(p);

    Verdict best;
    double best_bound_value = 0.0;

    // Threshold route over every real conjugate (any modulus != 0,1).
    ConjugateSystem probe = select_conjugates(p, rs); // also locates beta1
    for (size_t i = 0; i < rs.roots.size(); ++i) {
        const Root& r = rs.roots[i];
        if (r.value.imag() != 0.0) continue;
        if (r.value.real() == probe.beta1) continue;
        if (r.unit_modulus || r.value.real() == 0.0) continue;
        Verdict v;
        try {
            v = threshold_criterion(probe.beta1, r.value.real(), threshold, probe.beta1_radius,
                                    r.radius, rs.tol);
        } catch (const Error&) {
            continue;
        }
        if (v.certified) return v;
        // Inconclusive thresholds still bound H/log beta1 from below by
        // threshold / r when the normalized conjugate lies in (1,2).
        if (v.threshold_domain_ok && v.value > 0.0) {
            double bound = threshold / v.value;
            if (bound > best_bound_value) {
                best_bound_value = bound;
                best = v;
                best.value = bound;
                best.details += "; entropy ratio bound " + fmt(bound);
            }
        }
    }

    // Box-bound route over the modulus > 1 conjugates. The computed m_n
    // dominates max N_n (collision clusters are identical boxes), so L_n is a
    // valid entropy bound; the certifying inequality is re-checked against
    // the widened beta1 so the root radius cannot flip it.
    for (int n = 1; n <= n_max; ++n) {
        DepthResult d = compute_mn(probe, n, tail_N);
        if (d.ratio > best_bound_value) {
            best_bound_value = d.ratio;
            best = Verdict{};
            best.method = Method::BoxBound;
            best.value = d.ratio;
            best.n_used = n;
            best.mn = d.mn;
            best.details = "best box ratio " + fmt(d.ratio) + " at n = " + std::to_string(n) +
                           " (m_n = " + std::to_string(d.mn) + "), not above 1";
        }
        if (d.ratio > 1.0) {
            double beta1_hi = probe.beta1 + probe.beta1_radius;
            double ratio_safe = d.ln / (n * std::log(beta1_hi));
            if (ratio_safe > 1.0) {
                Verdict v;
                v.certified = true;
                v.method = Method::BoxBound;
                v.value = d.ratio;
                v.n_used = n;
                v.mn = d.mn;
                v.details = "L_n/(n log beta1) = " + fmt(d.ratio) + " at n = " + std::to_string(n) +
                            " (m_n = " + std::to_string(d.mn) + ")";
                return v;
            }
            best.details += "; ratio above 1 at n = " + std::to_string(n) +
                            " only within the root-error margin";
        }
    }

    best.certified = false;
    if (best.method == Method::None)
        best.details = "no applicable criterion";
    return best;
}

HeightCheckResult height_check(const IntPolynomial& p, bool assert_full_witness) {
    if (!p.monic()) fail(Status::DomainError, "height_check expects a monic polynomial");
    HeightCheckResult out;
    if (p.height() == 1) {
        out.needed = true;
        return out;
    }
    if (assert_full_witness) {
        out.needed = false;
        out.note = "height " + std::to_string(p.height()) +
                   " > 1 and asserted to be the full witness: no collisions, H = log 2";
    } else {
        out.needed = true;
        out.note = "height " + std::to_string(p.height()) +
                   " > 1; divisibility by a height-1 polynomial not ruled out, proceeding";
    }
    return out;
}

} // namespace garsia
