// Integer polynomials in one variable z, constant term first, canonical
// (no trailing zero coefficients).
#ifndef ARTIN_POLYNOMIAL_HPP
#define ARTIN_POLYNOMIAL_HPP

#include <string>
#include <vector>
#include <gmpxx.h>

namespace artin {

class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(long c) { if (c != 0) c_.push_back(mpz_class(c)); }
    IntPolynomial(const mpz_class& c) { if (c != 0) c_.push_back(c); }
    explicit IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial z() { return IntPolynomial(std::vector<mpz_class>{0, 1}); }
    static IntPolynomial one_plus_z() { return IntPolynomial(std::vector<mpz_class>{1, 1}); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    mpz_class leading() const { return c_.empty() ? mpz_class(0) : c_.back(); }

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ != b.c_; }

    IntPolynomial pow(unsigned long k) const;
    IntPolynomial shifted(std::size_t k) const;  // multiply by z^k

    mpz_class content() const;        // gcd of coefficients, >= 0
    IntPolynomial primitive() const;  // divided by content (zero stays zero)
    IntPolynomial scaled(const mpz_class& c) const;

    std::string str() const;  // "1 - 3z + z^2"

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

// primitive gcd with positive leading coefficient; gcd(0,0) = 0
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

// exact division; throws std::domain_error if b does not divide a
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace artin

#endif
