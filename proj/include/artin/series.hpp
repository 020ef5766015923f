// Rational generating functions with integer coefficients, the change-of-
// rings transforms on them, and the closed form for the Poincare series of
// the algebras built in this project.
//
// Canonical form: numerator and denominator are coprime integer polynomials
// of joint content 1 with positive denominator constant term, so equality of
// canonical forms is equality of formal power series.
#ifndef ARTIN_SERIES_HPP
#define ARTIN_SERIES_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "artin/polynomial.hpp"

namespace artin {

class RationalSeries {
public:
    RationalSeries() : num_(), den_(1) {}
    RationalSeries(long c) : num_(c), den_(1) {}
    RationalSeries(IntPolynomial num, IntPolynomial den);

    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator/(const RationalSeries& a, const RationalSeries& b);
    friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalSeries& a, const RationalSeries& b) { return !(a == b); }

    // first n+1 power series coefficients; throws if a coefficient is not an
    // integer (cannot happen when den(0) = 1)
    std::vector<mpz_class> expand(std::size_t n) const;

    // "(1 + z)^2 / (1 - 3z + z^2)"; pure powers of 1+z print in factored form
    std::string str() const;

    nlohmann::ordered_json to_json() const;
    static RationalSeries from_json(const nlohmann::json& j);

private:
    void canonicalize();
    IntPolynomial num_, den_;
};

RationalSeries one_plus_z_pow(unsigned long k);

// P_A from P_{A/x} for a non-zero divisor x: multiply by 1+z when x lies
// outside m^2 and by 1-z^2 when x lies inside. The descent direction divides.
RationalSeries regular_lift(const RationalSeries& quotient, bool x_in_m_squared);
RationalSeries regular_descent(const RationalSeries& ring, bool x_in_m_squared);

// P_A from P_{A/x} for a degree-one socle element x: P = q / (1 - z q).
// Hypothesis checking (x in m \ m^2, x socle) is the caller's job.
RationalSeries socle_lift(const RationalSeries& quotient);
RationalSeries socle_descent(const RationalSeries& ring);

// P_A from P_{A/(0:m)} for an Artinian Gorenstein A: P = q / (1 + z^2 q).
RationalSeries gorenstein_lift(const RationalSeries& quotient);
RationalSeries gorenstein_descent(const RationalSeries& ring);

// (1+z)^d / (1 - h z + z^2)
RationalSeries poincare_closed_form(long d, long h);

struct DerivationStep {
    std::string name;
    RationalSeries series;
};

struct Derivation {
    std::vector<DerivationStep> steps;
    RationalSeries final;

    const RationalSeries* find(const std::string& name) const {
        for (const auto& s : steps)
            if (s.name == name) return &s.series;
        return nullptr;
    }
};

// Replays the change-of-rings derivation of the closed form:
//   (1+z)^2  --2x regular descent (elements in m^2)-->  embdim2_gorenstein
//            --gorenstein descent-->                    embdim2_socle_quotient
//            --(h-2)x socle lift-->                     socle_quotient
//            --gorenstein lift-->                       artinian_gorenstein
//            --d x regular lift (elements off m^2)-->   final
Derivation poincare_via_change_of_rings(long d, long h);

}  // namespace artin

#endif
