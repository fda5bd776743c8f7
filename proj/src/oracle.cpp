#include "oracle.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace garsia {

namespace {

using boost::multiprecision::cpp_int;

void require_monic(const IntPolynomial& p) {
    if (p.degree() < 1) fail(Status::DomainError, "oracle requires degree >= 1");
    if (!p.monic()) fail(Status::DomainError, "oracle requires a monic polynomial");
}

// Remainder-is-zero test for sum eps_i x^(n-i) modulo the monic p. The
// ascending coefficient of x^j is eps_(n-j).
template <class I>
bool reduces_to_zero(const SignedWord& eps, const IntPolynomial& p, std::vector<I>& buf) {
    const int n = static_cast<int>(eps.size());
    const int d = p.degree();
    buf.assign(static_cast<size_t>(n), I(0));
    for (int j = 0; j < n; ++j) buf[static_cast<size_t>(j)] = eps[static_cast<size_t>(n - 1 - j)];
    for (int k = n - 1; k >= d; --k) {
        I f = buf[static_cast<size_t>(k)];
        if (f == 0) continue;
        buf[static_cast<size_t>(k)] = 0;
        for (int j = 0; j < d; ++j)
            buf[static_cast<size_t>(k - d + j)] -= f * I(p.coeff(j));
    }
    for (int j = 0; j < std::min(n, d); ++j)
        if (buf[static_cast<size_t>(j)] != 0) return false;
    return true;
}

// Coefficients during reduction are bounded by (1+height)^(n-d); stay in
// int64 whenever that bound fits.
bool fits_int64(const IntPolynomial& p, int n) {
    int steps = std::max(0, n - p.degree());
    double bits = steps * std::log2(1.0 + static_cast<double>(p.height()));
    return bits < 61.0;
}

struct ReductionBuffers {
    std::vector<long long> small;
    std::vector<cpp_int> big;
};

bool collision_with(const SignedWord& eps, const IntPolynomial& p, bool use_small,
                    ReductionBuffers& bufs) {
    return use_small ? reduces_to_zero(eps, p, bufs.small) : reduces_to_zero(eps, p, bufs.big);
}

} // namespace

bool collision_test(const SignedWord& eps, const IntPolynomial& p) {
    require_monic(p);
    if (eps.empty()) fail(Status::BadArgument, "empty signed word");
    ReductionBuffers bufs;
    return collision_with(eps, p, fits_int64(p, static_cast<int>(eps.size())), bufs);
}

long long count_collisions(const Word& a, const IntPolynomial& p, int budget) {
    require_monic(p);
    const int n = static_cast<int>(a.size());
    if (n < 1) fail(Status::BadArgument, "empty word");
    if (n > budget) fail(Status::BudgetExceeded, "word length exceeds the oracle budget");
    const bool small = fits_int64(p, n);
    ReductionBuffers bufs;
    SignedWord eps(static_cast<size_t>(n));
    long long count = 0;
    for (uint64_t b = 0; b < (uint64_t{1} << n); ++b) {
        for (int i = 0; i < n; ++i) {
            int bi = static_cast<int>((b >> (n - 1 - i)) & 1u);
            eps[static_cast<size_t>(i)] = static_cast<int8_t>(a[static_cast<size_t>(i)] - bi);
        }
        if (collision_with(eps, p, small, bufs)) ++count;
    }
    return count;
}

EntropyReport entropy_Hn(const IntPolynomial& p, int n, bool keep_counts, int budget) {
    require_monic(p);
    if (n < 1) fail(Status::BadArgument, "n must be >= 1");
    if (n > budget) fail(Status::BudgetExceeded, "n exceeds the oracle budget");
    EntropyReport rep;
    rep.n = n;
    const uint64_t total = uint64_t{1} << n;
    if (keep_counts) rep.per_word.reserve(total);
    double log_sum = 0.0;
    Word a(static_cast<size_t>(n));
    for (uint64_t w = 0; w < total; ++w) {
        for (int i = 0; i < n; ++i)
            a[static_cast<size_t>(i)] = static_cast<uint8_t>((w >> (n - 1 - i)) & 1u);
        long long c = count_collisions(a, p, budget);
        rep.maxN = std::max(rep.maxN, c);
        log_sum += std::log2(static_cast<double>(c));
        if (keep_counts) rep.per_word.push_back(c);
    }
    // H_n = n log 2 - 2^-n * sum log N_n(a), accumulated in base 2.
    rep.Hn = (static_cast<double>(n) - log_sum / static_cast<double>(total)) * std::log(2.0);
    return rep;
}

Word word_rev(const Word& a) { return Word(a.rbegin(), a.rend()); }

Word word_neg(const Word& a) {
    Word out = a;
    for (size_t i = 0; i < out.size(); i += 2) out[i] = static_cast<uint8_t>(1 - out[i]);
    return out;
}

Word word_from_index(uint64_t bits, int n) {
    Word a(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        a[static_cast<size_t>(i)] = static_cast<uint8_t>((bits >> (n - 1 - i)) & 1u);
    return a;
}

} // namespace garsia
