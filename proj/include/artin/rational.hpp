// Exact scalar types: arbitrary-precision rationals (default ground field)
// and a prime field GF(p) used as a cross-check mode.
#ifndef ARTIN_RATIONAL_HPP
#define ARTIN_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace artin {

// Exact rational number. Always canonical: gcd(|num|, den) = 1, den >= 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "n" or "n/d".
    static Rational from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        v.canonicalize();
        return Rational(v);
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    // "n" when integral, "n/d" otherwise.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_str();
    }

    static Rational from_rational(const Rational& r) { return r; }
    static std::string field_name() { return "rational"; }

private:
    mpq_class v_;
};

// Prime field element. The modulus is process-global and set once before any
// arithmetic (one command per process; see the concurrency notes in the CLI).
class GFp {
public:
    GFp() : v_(0) {}
    GFp(long n) {
        long p = static_cast<long>(modulus());
        long r = n % p;
        if (r < 0) r += p;
        v_ = static_cast<std::uint64_t>(r);
    }

    static void set_modulus(std::uint64_t p) {
        if (p < 3 || p % 2 == 0) throw std::invalid_argument("GFp: modulus must be an odd prime");
        if (p >= (1ull << 31)) throw std::invalid_argument("GFp: modulus too large");
        mpz_class z(static_cast<unsigned long>(p));
        if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
            throw std::invalid_argument("GFp: modulus is not prime");
        modulus_ref() = p;
    }
    static std::uint64_t modulus() {
        std::uint64_t p = modulus_ref();
        if (p == 0) throw std::logic_error("GFp: modulus not set");
        return p;
    }

    std::uint64_t value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return v_ == 0 ? 0 : 1; }

    GFp operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }
    GFp& operator+=(const GFp& o) {
        v_ += o.v_;
        if (v_ >= modulus()) v_ -= modulus();
        return *this;
    }
    GFp& operator-=(const GFp& o) {
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + modulus() - o.v_;
        return *this;
    }
    GFp& operator*=(const GFp& o) {
        v_ = (v_ * o.v_) % modulus();  // modulus < 2^31, no overflow in u64
        return *this;
    }
    GFp& operator/=(const GFp& o) { return *this *= o.inverse(); }

    friend GFp operator+(GFp a, const GFp& b) { return a += b; }
    friend GFp operator-(GFp a, const GFp& b) { return a -= b; }
    friend GFp operator*(GFp a, const GFp& b) { return a *= b; }
    friend GFp operator/(GFp a, const GFp& b) { return a /= b; }
    friend bool operator==(const GFp& a, const GFp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const GFp& a, const GFp& b) { return a.v_ != b.v_; }

    GFp inverse() const {
        if (v_ == 0) throw std::domain_error("GFp: inverse of zero");
        // extended Euclid on (v, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(modulus());
        std::int64_t newr = static_cast<std::int64_t>(v_);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
            tmp = r - q * newr; r = newr; newr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(modulus());
        return from_raw(static_cast<std::uint64_t>(t));
    }

    std::string str() const { return std::to_string(v_); }

    static GFp from_rational(const Rational& r) {
        mpz_class p(static_cast<unsigned long>(modulus()));
        mpz_class num = r.numerator() % p;
        if (num < 0) num += p;
        mpz_class den = r.denominator() % p;
        GFp d = from_raw(den.get_ui());
        if (d.is_zero()) throw std::domain_error("GFp: denominator vanishes mod p");
        return from_raw(num.get_ui()) / d;
    }
    static std::string field_name() { return "prime:" + std::to_string(modulus()); }

private:
    static GFp from_raw(std::uint64_t v) {
        GFp g;
        g.v_ = v;
        return g;
    }
    static std::uint64_t& modulus_ref() {
        static std::uint64_t p = 0;
        return p;
    }
    std::uint64_t v_;
};

}  // namespace artin

#endif
