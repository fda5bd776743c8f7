#include "int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "error.hpp"

namespace garsia {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

IntPolynomial IntPolynomial::parse(std::string_view text) {
    std::vector<long long> coeffs;
    std::string_view rest = trim(text);
    if (rest.empty()) fail(Status::ParseError, "empty coefficient list");
    while (true) {
        size_t comma = rest.find(',');
        std::string_view tok = trim(rest.substr(0, comma));
        if (tok.empty()) fail(Status::ParseError, "empty coefficient token");
        long long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            fail(Status::ParseError, "non-integer coefficient token '" + std::string(tok) + "'");
        coeffs.push_back(value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return from_coeffs(std::move(coeffs));
}

IntPolynomial IntPolynomial::from_coeffs(std::vector<long long> coeffs) {
    if (coeffs.empty()) fail(Status::ParseError, "empty coefficient list");
    if (coeffs.back() == 0) fail(Status::ParseError, "zero leading coefficient");
    return IntPolynomial(std::move(coeffs));
}

long long IntPolynomial::height() const {
    long long h = 0;
    for (long long c : coeffs_) h = std::max(h, std::llabs(c));
    return h;
}

std::complex<double> IntPolynomial::eval(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + static_cast<double>(coeffs_[i]);
    return acc;
}

std::complex<double> IntPolynomial::eval_derivative(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (size_t i = coeffs_.size(); i-- > 1;)
        acc = acc * x + static_cast<double>(coeffs_[i]) * static_cast<double>(i);
    return acc;
}

long long IntPolynomial::eval_int(long long x) const {
    long long acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::string IntPolynomial::to_string() const {
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        long long c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += (c > 0) ? "+" : "-";
        else if (c < 0) out += "-";
        long long a = std::llabs(c);
        if (a != 1 || i == 0) out += std::to_string(a);
        if (i > 0) out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    if (out.empty()) out = "0";
    return out;
}

IntPolynomial reverse_transform(const IntPolynomial& p) {
    if (p.degree() < 1) fail(Status::DomainError, "reverse requires degree >= 1");
    if (p.coeff(0) == 0) fail(Status::DomainError, "reverse requires nonzero constant term");
    std::vector<long long> rev(p.coeffs().rbegin(), p.coeffs().rend());
    if (rev.back() < 0)
        for (long long& c : rev) c = -c;
    return IntPolynomial::from_coeffs(std::move(rev));
}

IntPolynomial negate_transform(const IntPolynomial& p) {
    if (p.degree() < 1) fail(Status::DomainError, "negate requires degree >= 1");
    std::vector<long long> out = p.coeffs();
    for (size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    if (out.back() < 0)
        for (long long& c : out) c = -c;
    return IntPolynomial::from_coeffs(std::move(out));
}

} // namespace garsia
