#include "artin/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace artin {

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::pow(unsigned long k) const {
    IntPolynomial r(1);
    for (unsigned long i = 0; i < k; ++i) r = r * *this;
    return r;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
    if (is_zero()) return IntPolynomial();
    std::vector<mpz_class> r(k, mpz_class(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPolynomial(std::move(r));
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial IntPolynomial::primitive() const {
    if (is_zero()) return IntPolynomial();
    mpz_class g = content();
    std::vector<mpz_class> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / g;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::scaled(const mpz_class& c) const {
    if (c == 0) return IntPolynomial();
    std::vector<mpz_class> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * c;
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const mpz_class& c = c_[i];
        if (c == 0) continue;
        mpz_class abs_c = abs(c);
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        if (i == 0 || abs_c != 1) s += abs_c.get_str();
        if (i >= 1) s += "z";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

namespace {

// lc(b)^(deg a - deg b + 1) * a  mod  b, by repeated elimination
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
    const long db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const long shift = a.degree() - db;
        a = a.scaled(b.leading()) - b.scaled(a.leading()).shifted(static_cast<std::size_t>(shift));
    }
    return a;
}

}  // namespace

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    a = a.primitive();
    b = b.primitive();
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_remainder(a, b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.leading() < 0) a = -a;
    return a;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    if (a.is_zero()) return IntPolynomial();
    if (a.degree() < b.degree()) throw std::domain_error("divide_exact: not divisible");
    std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, mpz_class(0));
    IntPolynomial rem = a;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        mpz_class c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rem.leading().get_mpz_t(), b.leading().get_mpz_t());
        if (r != 0) throw std::domain_error("divide_exact: not divisible");
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
        q[shift] = c;
        rem = rem - b.scaled(c).shifted(shift);
    }
    if (!rem.is_zero()) throw std::domain_error("divide_exact: not divisible");
    return IntPolynomial(std::move(q));
}

}  // namespace artin
