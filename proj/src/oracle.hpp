#pragma once

#include <cstdint>
#include <vector>

#include "int_poly.hpp"

namespace garsia {

// Digit word a_1...a_n; index 0 holds a_1.
using Word = std::vector<uint8_t>;
// Difference word (a_1-b_1, ..., a_n-b_n) over {-1,0,1}.
using SignedWord = std::vector<int8_t>;

inline constexpr int kOracleBudget = 14;

struct EntropyReport {
    int n = 0;
    double Hn = 0.0;       // natural-log units
    long long maxN = 0;    // max over words of N_n
    std::vector<long long> per_word; // indexed by word value (a_1 = MSB); empty unless requested
};

// True iff sum eps_i x^(n-i) reduces to zero modulo the monic p, in exact
// integer arithmetic. Equality of the beta-power sums at every root of p.
bool collision_test(const SignedWord& eps, const IntPolynomial& p);

// N_n(a): the number of words b of the same length with equal beta-power sum.
// Plain enumeration of all 2^n candidates through collision_test.
long long count_collisions(const Word& a, const IntPolynomial& p, int budget = kOracleBudget);

// H_n from exact per-word counts.
EntropyReport entropy_Hn(const IntPolynomial& p, int n, bool keep_counts = false,
                         int budget = kOracleBudget);

Word word_rev(const Word& a);
// Flips bits at odd positions (1-indexed), keeps even positions.
Word word_neg(const Word& a);

Word word_from_index(uint64_t bits, int n); // MSB of `bits` (bit n-1) becomes a_1

} // namespace garsia
