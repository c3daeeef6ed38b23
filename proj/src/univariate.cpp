#include "domipoly/univariate.hpp"

#include <sstream>

namespace domipoly {

UnivariatePolynomial UnivariatePolynomial::term(int degree, Coeff c) {
    UnivariatePolynomial p;
    p.add_term(degree, c);
    return p;
}

void UnivariatePolynomial::add_term(int degree, const Coeff& c) {
    if (c == 0) return;
    auto it = terms_.find(degree);
    if (it == terms_.end()) {
        terms_.emplace(degree, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

UnivariatePolynomial UnivariatePolynomial::operator+(const UnivariatePolynomial& rhs) const {
    UnivariatePolynomial out = *this;
    for (const auto& [d, c] : rhs.terms_) out.add_term(d, c);
    return out;
}

UnivariatePolynomial UnivariatePolynomial::operator*(const UnivariatePolynomial& rhs) const {
    UnivariatePolynomial out;
    for (const auto& [da, ca] : terms_)
        for (const auto& [db, cb] : rhs.terms_) out.add_term(da + db, ca * cb);
    return out;
}

Coeff UnivariatePolynomial::eval(const Coeff& at) const {
    // Horner over the sparse support.
    Coeff acc(0);
    int deg = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (int d = deg; d > it->first; --d) acc *= at;
        acc += it->second;
        deg = it->first;
    }
    for (int d = deg; d > 0; --d) acc *= at;
    return acc;
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        const bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const Coeff a = neg ? Coeff(-c) : c;
        if (a != 1 || d == 0) {
            os << a.str();
            if (d > 0) os << "*";
        }
        if (d > 0) {
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

std::string UnivariatePolynomial::to_json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << ",";
        first = false;
        os << "[" << d << ",\"" << c.str() << "\"]";
    }
    os << "]";
    return os.str();
}

}  // namespace domipoly
