#include "domipoly/poly.hpp"

#include <cctype>
#include <sstream>

#include "domipoly/errors.hpp"

namespace domipoly {

BivariatePolynomial BivariatePolynomial::constant(Coeff c) {
    return term(0, 0, std::move(c));
}

BivariatePolynomial BivariatePolynomial::term(int xdeg, int ydeg, Coeff c) {
    BivariatePolynomial p;
    p.add_term(xdeg, ydeg, c);
    return p;
}

BivariatePolynomial BivariatePolynomial::one_minus_x_minus_y() {
    BivariatePolynomial p = constant(1);
    p.add_term(1, 0, -1);
    p.add_term(0, 1, -1);
    return p;
}

void BivariatePolynomial::add_term(int xdeg, int ydeg, const Coeff& c) {
    if (c == 0) return;
    const ExpPair key{xdeg, ydeg};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& rhs) const {
    BivariatePolynomial out = *this;
    out += rhs;
    return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, c);
    return *this;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& rhs) const {
    BivariatePolynomial out = *this;
    out -= rhs;
    return out;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, -c);
    return *this;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
    BivariatePolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& rhs) const {
    BivariatePolynomial out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_)
            out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
}

BivariatePolynomial BivariatePolynomial::power(int k) const {
    BivariatePolynomial out = constant(1);
    BivariatePolynomial base = *this;
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1) out = out * base;
        if (e > 1) base = base * base;
    }
    return out;
}

bool BivariatePolynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0} &&
           terms_.begin()->second == 1;
}

int BivariatePolynomial::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;
    return e.first + e.second;
}

Coeff BivariatePolynomial::coefficient(int xdeg, int ydeg) const {
    auto it = terms_.find({xdeg, ydeg});
    return it == terms_.end() ? Coeff(0) : it->second;
}

namespace {

void append_monomial(std::ostringstream& os, const Coeff& abs_coeff, int xdeg, int ydeg,
                     const std::string& xvar, const std::string& yvar) {
    const bool constant = (xdeg == 0 && ydeg == 0);
    bool need_star = false;
    if (abs_coeff != 1 || constant) {
        os << abs_coeff.str();
        need_star = true;
    }
    if (xdeg > 0) {
        if (need_star) os << "*";
        os << xvar;
        if (xdeg > 1) os << "^" << xdeg;
        need_star = true;
    }
    if (ydeg > 0) {
        if (need_star) os << "*";
        os << yvar;
        if (ydeg > 1) os << "^" << ydeg;
    }
}

}  // namespace

std::string BivariatePolynomial::to_canonical_string(const std::string& xvar,
                                                     const std::string& yvar) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        append_monomial(os, neg ? Coeff(-c) : c, e.first, e.second, xvar, yvar);
    }
    return os.str();
}

std::string BivariatePolynomial::to_json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << ",";
        first = false;
        os << "[" << e.first << "," << e.second << ",\"" << c.str() << "\"]";
    }
    os << "]";
    return os.str();
}

Rational BivariatePolynomial::eval_rational(const Rational& xv, const Rational& yv) const {
    int maxx = 0, maxy = 0;
    for (const auto& [e, c] : terms_) {
        maxx = std::max(maxx, e.first);
        maxy = std::max(maxy, e.second);
    }
    std::vector<Rational> xpow(maxx + 1), ypow(maxy + 1);
    xpow[0] = 1;
    ypow[0] = 1;
    for (int d = 1; d <= maxx; ++d) xpow[d] = xpow[d - 1] * xv;
    for (int d = 1; d <= maxy; ++d) ypow[d] = ypow[d - 1] * yv;
    Rational sum(0);
    for (const auto& [e, c] : terms_) sum += Rational(c) * xpow[e.first] * ypow[e.second];
    return sum;
}

BivariatePolynomial divide_exact(const BivariatePolynomial& num,
                                 const BivariatePolynomial& div) {
    const Coeff unit = div.coefficient(0, 0);
    if (unit != 1 && unit != -1)
        throw NonUnitConstantTerm("divisor constant term is " + unit.str() + ", need +-1");

    const int bound = num.total_degree();
    BivariatePolynomial quotient;
    BivariatePolynomial residual = num;
    while (!residual.is_zero()) {
        const auto& [exp, coeff] = *residual.terms().begin();
        if (exp.first + exp.second > bound)
            throw RemainderNonZero("residual climbed past degree bound; not divisible");
        // residual_min / unit becomes the next quotient term; subtracting
        // term*div cancels it and only introduces strictly larger terms.
        const Coeff q = (unit == 1) ? coeff : Coeff(-coeff);
        quotient.add_term(exp.first, exp.second, q);
        residual -= BivariatePolynomial::term(exp.first, exp.second, q) * div;
    }
    return quotient;
}

BivariatePolynomial divide_by_x_power(const BivariatePolynomial& p, int k) {
    if (k == 0) return p;
    BivariatePolynomial out;
    for (const auto& [e, c] : p.terms()) {
        if (e.first < k)
            throw DivisionByMonomialFailed("term with x-degree " + std::to_string(e.first) +
                                           " not divisible by x^" + std::to_string(k));
        out.add_term(e.first - k, e.second, c);
    }
    return out;
}

BivariatePolynomial substitute_monomials(const BivariatePolynomial& p,
                                         MonomialImage x_image,
                                         MonomialImage y_image) {
    BivariatePolynomial out;
    for (const auto& [e, c] : p.terms()) {
        out.add_term(e.first * x_image.first_deg + e.second * y_image.first_deg,
                     e.first * x_image.second_deg + e.second * y_image.second_deg, c);
    }
    return out;
}

UnivariatePolynomial coefficient_slice(const BivariatePolynomial& p, int ydeg) {
    UnivariatePolynomial out;
    for (const auto& [e, c] : p.terms())
        if (e.second == ydeg) out.add_term(e.first, c);
    return out;
}

namespace {

struct Scanner {
    std::string s;
    size_t i = 0;

    explicit Scanner(const std::string& text) {
        s.reserve(text.size());
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }

    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    bool eat(char ch) {
        if (!done() && s[i] == ch) {
            ++i;
            return true;
        }
        return false;
    }

    Coeff integer() {
        size_t start = i;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected integer at offset " + std::to_string(start));
        return Coeff(s.substr(start, i - start));
    }

    int small_int() {
        size_t start = i;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected exponent at offset " + std::to_string(start));
        return std::stoi(s.substr(start, i - start));
    }
};

}  // namespace

BivariatePolynomial parse_polynomial(const std::string& text) {
    Scanner sc(text);
    if (sc.done()) throw ParseError("empty polynomial text");

    BivariatePolynomial out;
    bool first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.eat('-')) {
            sign = -1;
        } else if (sc.eat('+')) {
            if (first) throw ParseError("leading '+'");
        } else if (!first) {
            throw ParseError("expected '+' or '-' at offset " + std::to_string(sc.i));
        }
        first = false;

        Coeff coeff(1);
        int xdeg = 0, ydeg = 0;
        bool saw_anything = false;
        if (!sc.done() && std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            coeff = sc.integer();
            saw_anything = true;
            sc.eat('*');
        }
        if (sc.eat('x')) {
            xdeg = sc.eat('^') ? sc.small_int() : 1;
            saw_anything = true;
            sc.eat('*');
        }
        if (sc.eat('y')) {
            ydeg = sc.eat('^') ? sc.small_int() : 1;
            saw_anything = true;
        }
        if (!saw_anything) throw ParseError("empty term at offset " + std::to_string(sc.i));
        out.add_term(xdeg, ydeg, sign > 0 ? coeff : Coeff(-coeff));
    }
    // "0" parses as the constant 0 and add_term drops it, yielding the zero
    // polynomial, which is what the canonical printer emits for it.
    return out;
}

}  // namespace domipoly
