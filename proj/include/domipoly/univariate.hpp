#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace domipoly {

using Coeff = boost::multiprecision::cpp_int;

// Dense-enough univariate polynomial with exact integer coefficients,
// stored sparsely as degree -> coefficient. Zero coefficients are never kept.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;

    static UnivariatePolynomial term(int degree, Coeff c);

    void add_term(int degree, const Coeff& c);

    UnivariatePolynomial operator+(const UnivariatePolynomial& rhs) const;
    UnivariatePolynomial operator*(const UnivariatePolynomial& rhs) const;
    bool operator==(const UnivariatePolynomial& rhs) const = default;

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    Coeff eval(const Coeff& at) const;

    // "t + 3*t^2 + t^3" with the grammar shared with the bivariate printer.
    std::string to_string(const std::string& var = "t") const;
    // JSON-ready [degree, coefficient-as-decimal-string] pairs, ascending degree.
    std::string to_json() const;

    const std::map<int, Coeff>& terms() const { return terms_; }

private:
    std::map<int, Coeff> terms_;
};

}  // namespace domipoly
