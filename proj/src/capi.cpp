#include "garsia/garsia.h"

#include <algorithm>
#include <cstring>
#include <string>

#include "conjugates.hpp"
#include "criteria.hpp"
#include "error.hpp"
#include "int_poly.hpp"
#include "oracle.hpp"
#include "roots.hpp"
#include "stabbing.hpp"

struct garsia_poly {
    garsia::IntPolynomial p;
};

struct garsia_system {
    garsia::ConjugateSystem s;
    int tail_N = 0;
};

namespace {

using garsia::Error;
using garsia::Status;

int status_code(Status s) { return static_cast<int>(s); }

template <class F>
int guarded(F&& f) {
    try {
        f();
        return GARSIA_OK;
    } catch (const Error& e) {
        return status_code(e.status());
    } catch (const std::bad_alloc&) {
        return GARSIA_ERR_BUDGET;
    } catch (const std::exception&) {
        return GARSIA_ERR_INTERNAL;
    }
}

void copy_str(const std::string& s, char* buf, size_t cap) {
    if (!buf || cap == 0) return;
    size_t n = std::min(s.size(), cap - 1);
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
}

void fill_depth(const garsia::DepthResult& r, garsia_depth* out, double* witness, double* cell) {
    if (out) *out = garsia_depth{r.n, r.mn, r.ln, r.ratio, r.margin};
    if (witness)
        std::copy(r.witness.begin(), r.witness.end(), witness);
    if (cell) {
        size_t d = r.witness_cell.lo.size();
        std::copy(r.witness_cell.lo.begin(), r.witness_cell.lo.end(), cell);
        std::copy(r.witness_cell.hi.begin(), r.witness_cell.hi.end(), cell + d);
    }
}

void fill_verdict(const garsia::Verdict& v, garsia_verdict* out) {
    out->certified = v.certified ? 1 : 0;
    switch (v.method) {
        case garsia::Method::Threshold: out->method = GARSIA_METHOD_THRESHOLD; break;
        case garsia::Method::BoxBound: out->method = GARSIA_METHOD_BOX_BOUND; break;
        default: out->method = GARSIA_METHOD_NONE; break;
    }
    out->value = v.value;
    out->n_used = v.n_used;
    out->mn = v.mn;
    copy_str(v.details, out->details, sizeof out->details);
}

garsia::Word parse_word(const char* word) {
    if (!word || !*word) garsia::fail(Status::BadArgument, "empty word");
    garsia::Word a;
    for (const char* c = word; *c; ++c) {
        if (*c != '0' && *c != '1')
            garsia::fail(Status::ParseError, "word must consist of '0' and '1'");
        a.push_back(static_cast<uint8_t>(*c - '0'));
    }
    return a;
}

} // namespace

extern "C" {

const char* garsia_status_str(int status) {
    switch (status) {
        case GARSIA_OK: return "ok";
        case GARSIA_ERR_PARSE: return "parse error";
        case GARSIA_ERR_DOMAIN: return "domain error";
        case GARSIA_ERR_BUDGET: return "budget exceeded";
        case GARSIA_ERR_NO_BETA1: return "no root in (1,2)";
        case GARSIA_ERR_AMBIGUOUS: return "ambiguous beta1; designate by index";
        case GARSIA_ERR_UNIT_MODULUS: return "conjugate modulus too close to 1";
        case GARSIA_ERR_NO_CONVERGE: return "root finding did not converge";
        case GARSIA_ERR_INAPPLICABLE: return "criterion inapplicable";
        case GARSIA_ERR_ARG: return "bad argument";
        default: return "internal error";
    }
}

int garsia_poly_parse(const char* text, garsia_poly** out) {
    if (!text || !out) return GARSIA_ERR_ARG;
    return guarded([&] { *out = new garsia_poly{garsia::IntPolynomial::parse(text)}; });
}

void garsia_poly_free(garsia_poly* p) { delete p; }

int garsia_poly_degree(const garsia_poly* p) { return p ? p->p.degree() : -1; }

long long garsia_poly_height(const garsia_poly* p) { return p ? p->p.height() : -1; }

int garsia_poly_coeff(const garsia_poly* p, int i, long long* out) {
    if (!p || !out || i < 0 || i > p->p.degree()) return GARSIA_ERR_ARG;
    *out = p->p.coeff(i);
    return GARSIA_OK;
}

int garsia_poly_is_monic(const garsia_poly* p) { return (p && p->p.monic()) ? 1 : 0; }

int garsia_poly_format(const garsia_poly* p, char* buf, size_t cap) {
    if (!p || !buf || cap == 0) return GARSIA_ERR_ARG;
    return guarded([&] { copy_str(p->p.to_string(), buf, cap); });
}

int garsia_poly_transform(const garsia_poly* p, int which, garsia_poly** out) {
    if (!p || !out) return GARSIA_ERR_ARG;
    return guarded([&] {
        if (which == GARSIA_TRANSFORM_REVERSE)
            *out = new garsia_poly{garsia::reverse_transform(p->p)};
        else if (which == GARSIA_TRANSFORM_NEGATE)
            *out = new garsia_poly{garsia::negate_transform(p->p)};
        else
            garsia::fail(Status::BadArgument, "unknown transform");
    });
}

int garsia_find_roots(const garsia_poly* p, double tol, garsia_root* roots, int cap, int* count) {
    if (!p || !count) return GARSIA_ERR_ARG;
    return guarded([&] {
        garsia::RootSet rs = garsia::find_roots(p->p, tol > 0 ? tol : garsia::kDefaultRootTol);
        *count = static_cast<int>(rs.roots.size());
        int n = std::min(cap, *count);
        for (int i = 0; i < n && roots; ++i) {
            const garsia::Root& r = rs.roots[static_cast<size_t>(i)];
            roots[i] = garsia_root{r.value.real(), r.value.imag(), r.radius, r.conj_pair,
                                   r.unit_modulus ? 1 : 0};
        }
    });
}

int garsia_system_create(const garsia_poly* p, const int* indices, int n_indices, int beta1_index,
                         garsia_system** out) {
    if (!p || !out || (n_indices > 0 && !indices) || n_indices < 0) return GARSIA_ERR_ARG;
    return guarded([&] {
        garsia::RootSet rs = garsia::find_roots(p->p);
        garsia::ConjugateSystem s =
            indices ? garsia::select_conjugates(p->p, rs,
                                                std::span<const int>(indices,
                                                                     static_cast<size_t>(n_indices)),
                                                beta1_index)
                    : garsia::select_conjugates(p->p, rs, beta1_index);
        *out = new garsia_system{std::move(s), 0};
    });
}

int garsia_system_create_free(double beta1, const double* re, const double* im, int k,
                              garsia_system** out) {
    if (!out || k < 0 || (k > 0 && !re)) return GARSIA_ERR_ARG;
    return guarded([&] {
        std::vector<std::complex<double>> conj;
        for (int i = 0; i < k; ++i)
            conj.emplace_back(re[i], im ? im[i] : 0.0);
        *out = new garsia_system{garsia::make_free_system(beta1, conj), 0};
    });
}

void garsia_system_free(garsia_system* s) { delete s; }

double garsia_system_beta1(const garsia_system* s) { return s ? s->s.beta1 : 0.0; }

int garsia_system_dimension(const garsia_system* s) { return s ? s->s.dimension() : 0; }

int garsia_system_conjugate_count(const garsia_system* s) {
    return s ? static_cast<int>(s->s.conjugates.size()) : 0;
}

int garsia_system_conjugate(const garsia_system* s, int k, double* re, double* im) {
    if (!s || k < 0 || k >= static_cast<int>(s->s.conjugates.size())) return GARSIA_ERR_ARG;
    const garsia::Conjugate& c = s->s.conjugates[static_cast<size_t>(k)];
    if (re) *re = c.value.real();
    if (im) *im = c.value.imag();
    return GARSIA_OK;
}

int garsia_system_warning(const garsia_system* s, int k, char* buf, size_t cap) {
    if (!s || k < 0) return GARSIA_ERR_ARG;
    if (k >= static_cast<int>(s->s.warnings.size())) {
        copy_str("", buf, cap);
        return GARSIA_OK;
    }
    copy_str(s->s.warnings[static_cast<size_t>(k)], buf, cap);
    return GARSIA_OK;
}

int garsia_system_set_tail_depth(garsia_system* s, int N) {
    if (!s || N < 0) return GARSIA_ERR_ARG;
    s->tail_N = N;
    return GARSIA_OK;
}

int garsia_normalize_conjugate(double b2, double* out) {
    if (!out) return GARSIA_ERR_ARG;
    return guarded([&] { *out = garsia::normalize_conjugate(b2); });
}

int garsia_compute_mn(const garsia_system* s, int n, garsia_depth* out, double* witness,
                      double* cell) {
    if (!s || !out) return GARSIA_ERR_ARG;
    return guarded([&] { fill_depth(garsia::compute_mn(s->s, n, s->tail_N), out, witness, cell); });
}

int garsia_best_bound(const garsia_system* s, int n_max, garsia_depth* best,
                      int* first_certifying_n) {
    if (!s || !best) return GARSIA_ERR_ARG;
    return guarded([&] {
        garsia::BestBound bb = garsia::best_bound(s->s, n_max, s->tail_N);
        fill_depth(bb.best, best, nullptr, nullptr);
        if (first_certifying_n) *first_certifying_n = bb.first_certifying_n;
    });
}

int garsia_certify_region(const garsia_system* s, const double* halfwidths, int n,
                          garsia_region_depth* out) {
    if (!s || !halfwidths || !out) return GARSIA_ERR_ARG;
    return guarded([&] {
        std::vector<double> hw(halfwidths, halfwidths + s->s.dimension());
        garsia::CertifiedDepth cd = garsia::certify_region(s->s, hw, n, s->tail_N);
        *out = garsia_region_depth{cd.m_lower, cd.m_upper, cd.certified ? 1 : 0, cd.ln_constant};
    });
}

int garsia_seeded_mn_lower_bound(const garsia_system* s, int n, const double* seed_cells,
                                 int n_seeds, long long* out) {
    if (!s || !seed_cells || n_seeds <= 0 || !out) return GARSIA_ERR_ARG;
    return guarded([&] {
        const size_t d = static_cast<size_t>(s->s.dimension());
        std::vector<garsia::Box> seeds;
        for (int k = 0; k < n_seeds; ++k) {
            garsia::Box b;
            b.lo.assign(seed_cells + 2 * d * static_cast<size_t>(k),
                        seed_cells + 2 * d * static_cast<size_t>(k) + d);
            b.hi.assign(seed_cells + 2 * d * static_cast<size_t>(k) + d,
                        seed_cells + 2 * d * static_cast<size_t>(k) + 2 * d);
            seeds.push_back(std::move(b));
        }
        *out = garsia::seeded_mn_lower_bound(s->s, n, seeds, s->tail_N);
    });
}

int garsia_oracle_collision(const garsia_poly* p, const signed char* eps, int n, int* collides) {
    if (!p || !eps || n < 1 || !collides) return GARSIA_ERR_ARG;
    return guarded([&] {
        garsia::SignedWord e(eps, eps + n);
        for (int8_t v : e)
            if (v < -1 || v > 1) garsia::fail(Status::BadArgument, "eps entries must be -1, 0, 1");
        *collides = garsia::collision_test(e, p->p) ? 1 : 0;
    });
}

int garsia_oracle_count(const garsia_poly* p, const char* word, long long* count) {
    if (!p || !count) return GARSIA_ERR_ARG;
    return guarded([&] { *count = garsia::count_collisions(parse_word(word), p->p); });
}

int garsia_oracle_entropy(const garsia_poly* p, int n, double* Hn, long long* maxN,
                          long long* per_word) {
    if (!p || !Hn || !maxN) return GARSIA_ERR_ARG;
    return guarded([&] {
        garsia::EntropyReport rep = garsia::entropy_Hn(p->p, n, per_word != nullptr);
        *Hn = rep.Hn;
        *maxN = rep.maxN;
        if (per_word) std::copy(rep.per_word.begin(), rep.per_word.end(), per_word);
    });
}

int garsia_word_transform(char* word, int which) {
    if (!word) return GARSIA_ERR_ARG;
    return guarded([&] {
        garsia::Word a = parse_word(word);
        garsia::Word b = (which == GARSIA_WORD_REV)   ? garsia::word_rev(a)
                         : (which == GARSIA_WORD_NEG) ? garsia::word_neg(a)
                                                      : (garsia::fail(Status::BadArgument,
                                                                      "unknown word transform"),
                                                         garsia::Word{});
        for (size_t i = 0; i < b.size(); ++i) word[i] = static_cast<char>('0' + b[i]);
    });
}

int garsia_threshold_criterion(double beta1, double conj, double threshold, double beta1_radius,
                               double conj_radius, garsia_verdict* out) {
    if (!out) return GARSIA_ERR_ARG;
    return guarded([&] {
        garsia::Verdict v =
            garsia::threshold_criterion(beta1, conj, threshold, beta1_radius, conj_radius);
        fill_verdict(v, out);
    });
}

int garsia_dimension_report(const garsia_poly* p, int n_max, double threshold, int tail_N,
                            garsia_verdict* out) {
    if (!p || !out || n_max < 0) return GARSIA_ERR_ARG;
    return guarded([&] {
        garsia::Verdict v = garsia::dimension_report(p->p, n_max, threshold, tail_N);
        fill_verdict(v, out);
    });
}

int garsia_height_check(const garsia_poly* p, int assert_full_witness, int* needed, char* note,
                        size_t cap) {
    if (!p || !needed) return GARSIA_ERR_ARG;
    return guarded([&] {
        garsia::HeightCheckResult r = garsia::height_check(p->p, assert_full_witness != 0);
        *needed = r.needed ? 1 : 0;
        copy_str(r.note, note, cap);
    });
}

} // extern "C"
