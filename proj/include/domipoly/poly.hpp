#pragma once

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "domipoly/univariate.hpp"

namespace domipoly {

using Rational = boost::multiprecision::cpp_rational;

// Exponent pair (x-degree, y-degree).
using ExpPair = std::pair<int, int>;

// Graded order: total degree first, ties broken by x-degree. For a fixed
// total degree the x-degree determines the y-degree, so this is a total
// order on exponent pairs. It is both the printing order and the
// elimination order used by exact division.
struct GradedOrder {
    bool operator()(const ExpPair& a, const ExpPair& b) const {
        const int ta = a.first + a.second, tb = b.first + b.second;
        if (ta != tb) return ta < tb;
        return a.first < b.first;
    }
};

// Sparse bivariate polynomial over arbitrary-precision integers.
// Canonical form invariant: no stored coefficient is zero, so equality of
// polynomials is equality of the term maps.
class BivariatePolynomial {
public:
    using TermMap = std::map<ExpPair, Coeff, GradedOrder>;

    BivariatePolynomial() = default;

    static BivariatePolynomial zero() { return {}; }
    static BivariatePolynomial constant(Coeff c);
    static BivariatePolynomial term(int xdeg, int ydeg, Coeff c);
    static BivariatePolynomial var_x() { return term(1, 0, 1); }
    static BivariatePolynomial var_y() { return term(0, 1, 1); }
    // 1 - x - y, the divisor used by the conditional-recovery identities.
    static BivariatePolynomial one_minus_x_minus_y();

    void add_term(int xdeg, int ydeg, const Coeff& c);

    BivariatePolynomial operator+(const BivariatePolynomial& rhs) const;
    BivariatePolynomial operator-(const BivariatePolynomial& rhs) const;
    BivariatePolynomial operator*(const BivariatePolynomial& rhs) const;
    BivariatePolynomial operator-() const;
    BivariatePolynomial& operator+=(const BivariatePolynomial& rhs);
    BivariatePolynomial& operator-=(const BivariatePolynomial& rhs);

    bool operator==(const BivariatePolynomial& rhs) const = default;

    BivariatePolynomial power(int k) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int total_degree() const;  // -1 for the zero polynomial
    Coeff coefficient(int xdeg, int ydeg) const;

    const TermMap& terms() const { return terms_; }

    std::string to_canonical_string(const std::string& xvar = "x",
                                    const std::string& yvar = "y") const;
    std::string to_json() const;

    Rational eval_rational(const Rational& xv, const Rational& yv) const;

private:
    TermMap terms_;
};

// q with q*div == num, found by eliminating the minimal graded term of the
// residual against the divisor's constant term. The divisor must have
// constant term +-1 (throws NonUnitConstantTerm otherwise); a residual whose
// minimal total degree climbs past the numerator's maximal total degree
// proves indivisibility (throws RemainderNonZero).
BivariatePolynomial divide_exact(const BivariatePolynomial& num,
                                 const BivariatePolynomial& div);

// Exact division by x^k; throws DivisionByMonomialFailed if some term has
// x-degree < k.
BivariatePolynomial divide_by_x_power(const BivariatePolynomial& p, int k);

// A monomial image for substitution, as exponents over the output variable
// pair (first, second). E.g. x -> y*t is {1, 1} with output vars (t, y).
struct MonomialImage {
    int first_deg = 0;
    int second_deg = 0;
};

// Maps each term c*x^a*y^b to c*ximg^a*yimg^b over the output variable pair.
BivariatePolynomial substitute_monomials(const BivariatePolynomial& p,
                                         MonomialImage x_image,
                                         MonomialImage y_image);

// All terms of exact second-variable degree `ydeg`, as a univariate
// polynomial in the first variable.
UnivariatePolynomial coefficient_slice(const BivariatePolynomial& p, int ydeg);

// Parses the text grammar emitted by to_canonical_string:
//   poly := ['-'] term (('+'|'-') term)*
//   term := [integer ['*']] ['x' ['^' int]] ['*'] ['y' ['^' int]]
// Whitespace-insensitive; repeated monomials are summed.
BivariatePolynomial parse_polynomial(const std::string& text);

}  // namespace domipoly
