#pragma once

#include <complex>
#include <string_view>
#include <vector>

namespace garsia {

// Integer-coefficient polynomial, coefficients in ascending degree order.
// The leading coefficient is always nonzero.
class IntPolynomial {
public:
    static IntPolynomial parse(std::string_view text);
    static IntPolynomial from_coeffs(std::vector<long long> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    long long height() const;
    long long leading() const { return coeffs_.back(); }
    bool monic() const { return coeffs_.back() == 1; }
    const std::vector<long long>& coeffs() const { return coeffs_; }
    long long coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }

    std::complex<double> eval(std::complex<double> x) const;
    std::complex<double> eval_derivative(std::complex<double> x) const;
    long long eval_int(long long x) const; // exactness only guaranteed for x in {-1,0,1}

    std::string to_string() const; // "x^4-x-1" style display form

    bool operator==(const IntPolynomial& other) const = default;

private:
    explicit IntPolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {}
    std::vector<long long> coeffs_;
};

// x^d * p(1/x), sign-normalized so the leading coefficient is positive.
// Requires a nonzero constant term.
IntPolynomial reverse_transform(const IntPolynomial& p);

// p(-x), sign-normalized so the leading coefficient is positive.
IntPolynomial negate_transform(const IntPolynomial& p);

} // namespace garsia
