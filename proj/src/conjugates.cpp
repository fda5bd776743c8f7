#include "conjugates.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace garsia {

namespace {

Conjugate classify(const Root& r) {
    Conjugate c;
    c.value = r.value;
    c.radius = r.radius;
    if (r.value.imag() == 0.0)
        c.kind = (r.value.real() > 0.0) ? ConjugateKind::RealPositive : ConjugateKind::RealNegative;
    else
        c.kind = ConjugateKind::Complex;
    return c;
}

void check_modulus_range(const Conjugate& c) {
    double m = std::abs(c.value);
    if (m > 2.0 + c.radius)
        fail(Status::DomainError, "conjugate modulus " + std::to_string(m) +
                                      " exceeds 2; outside the parameter space");
}

void add_minimality_warnings(const IntPolynomial& p, ConjugateSystem& sys) {
    if (p.eval_int(1) == 0)
        sys.warnings.push_back("polynomial has root 1; it is not a minimal polynomial");
    if (p.eval_int(-1) == 0)
        sys.warnings.push_back("polynomial has root -1; it is not a minimal polynomial");
}

int locate_beta1(const RootSet& rs, int beta1_index) {
    if (beta1_index >= 0) {
        if (beta1_index >= static_cast<int>(rs.roots.size()))
            fail(Status::BadArgument, "beta1 index out of range");
        const Root& r = rs.roots[static_cast<size_t>(beta1_index)];
        if (r.value.imag() != 0.0 || !(r.value.real() > 1.0 && r.value.real() < 2.0))
            fail(Status::DomainError, "designated beta1 root is not a real value in (1,2)");
        return beta1_index;
    }
    int found = -1;
    for (size_t i = 0; i < rs.roots.size(); ++i) {
        const Root& r = rs.roots[i];
        if (r.value.imag() == 0.0 && r.value.real() > 1.0 && r.value.real() < 2.0) {
            if (found >= 0)
                fail(Status::AmbiguousBeta1,
                     "multiple roots in (1,2); designate beta1 by index");
            found = static_cast<int>(i);
        }
    }
    if (found < 0) fail(Status::NoBeta1, "no root in (1,2)");
    return found;
}

} // namespace

ConjugateSystem select_conjugates(const IntPolynomial& p, const RootSet& rs, int beta1_index) {
    int b1 = locate_beta1(rs, beta1_index);
    ConjugateSystem sys;
    sys.beta1 = rs.roots[static_cast<size_t>(b1)].value.real();
    sys.beta1_radius = rs.roots[static_cast<size_t>(b1)].radius;
    sys.source = p;
    for (size_t i = 0; i < rs.roots.size(); ++i) {
        if (static_cast<int>(i) == b1) continue;
        const Root& r = rs.roots[i];
        if (r.unit_modulus) continue;
        if (std::abs(r.value) <= 1.0) continue;
        if (r.value.imag() < 0.0) continue; // keep the Im > 0 representative only
        Conjugate c = classify(r);
        check_modulus_range(c);
        sys.conjugates.push_back(c);
    }
    add_minimality_warnings(p, sys);
    return sys;
}

ConjugateSystem select_conjugates(const IntPolynomial& p, const RootSet& rs,
                                  std::span<const int> indices, int beta1_index) {
    int b1 = locate_beta1(rs, beta1_index);
    ConjugateSystem sys;
    sys.beta1 = rs.roots[static_cast<size_t>(b1)].value.real();
    sys.beta1_radius = rs.roots[static_cast<size_t>(b1)].radius;
    sys.source = p;
    std::vector<int> taken;
    for (int idx : indices) {
        if (idx < 0 || idx >= static_cast<int>(rs.roots.size()))
            fail(Status::BadArgument, "conjugate index out of range");
        const Root* r = &rs.roots[static_cast<size_t>(idx)];
        if (r->value.imag() < 0.0) { // replace by the representative
            idx = r->conj_pair;
            r = &rs.roots[static_cast<size_t>(idx)];
        }
        if (idx == b1) fail(Status::DomainError, "requested conjugate equals beta1");
        if (r->unit_modulus)
            fail(Status::UnitModulus, "requested root " + std::to_string(idx) +
                                          " lies on the unit circle within tolerance");
        if (std::abs(r->value) <= 1.0)
            fail(Status::UnitModulus,
                 "requested root " + std::to_string(idx) + " has modulus <= 1");
        if (std::find(taken.begin(), taken.end(), idx) != taken.end())
            fail(Status::DomainError,
                 "requested conjugates contain a complex-conjugate duplicate");
        taken.push_back(idx);
        Conjugate c = classify(*r);
        check_modulus_range(c);
        sys.conjugates.push_back(c);
    }
    add_minimality_warnings(p, sys);
    return sys;
}

ConjugateSystem make_free_system(double beta1, std::span<const std::complex<double>> conjugates) {
    if (!(beta1 > 1.0 && beta1 < 2.0)) fail(Status::DomainError, "beta1 must lie in (1,2)");
    ConjugateSystem sys;
    sys.beta1 = beta1;
    for (std::complex<double> v : conjugates) {
        if (v.imag() < 0.0) v = std::conj(v);
        if (!(std::abs(v) > 1.0))
            fail(Status::DomainError, "conjugate modulus must exceed 1");
        Conjugate c;
        c.value = v;
        c.kind = (v.imag() == 0.0)
                     ? (v.real() > 0.0 ? ConjugateKind::RealPositive : ConjugateKind::RealNegative)
                     : ConjugateKind::Complex;
        check_modulus_range(c);
        sys.conjugates.push_back(c);
    }
    return sys;
}

double normalize_conjugate(double b2) {
    if (b2 == 0.0 || b2 == 1.0 || b2 == -1.0 || !std::isfinite(b2))
        fail(Status::DomainError, "normalize_conjugate undefined for 0 and +-1");
    if (b2 > 1.0) return b2;
    if (b2 > 0.0) return 1.0 / b2;
    if (b2 > -1.0) return -1.0 / b2;
    return -b2;
}

} // namespace garsia
