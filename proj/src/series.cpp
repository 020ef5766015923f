#include "artin/series.hpp"

#include <stdexcept>

namespace artin {

RationalSeries::RationalSeries(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void RationalSeries::canonicalize() {
    if (den_.is_zero() || den_.coeff(0) == 0)
        throw std::domain_error("series: denominator constant term vanishes");
    if (num_.is_zero()) {
        den_ = IntPolynomial(1);
        return;
    }
    IntPolynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0 || g.leading() != 1) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (c > 1) {
        num_ = divide_exact(num_, IntPolynomial(c));
        den_ = divide_exact(den_, IntPolynomial(c));
    }
    if (den_.coeff(0) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    return RationalSeries(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    return RationalSeries(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    return RationalSeries(a.num_ * b.num_, a.den_ * b.den_);
}

RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) {
    if (b.is_zero()) throw std::domain_error("series: division by zero series");
    return RationalSeries(a.num_ * b.den_, a.den_ * b.num_);
}

std::vector<mpz_class> RationalSeries::expand(std::size_t n) const {
    // c_i = (num_i - sum_{j>=1} den_j c_{i-j}) / den_0, exact
    std::vector<mpq_class> c(n + 1);
    mpq_class d0(den_.coeff(0));
    for (std::size_t i = 0; i <= n; ++i) {
        mpq_class acc(num_.coeff(i));
        for (std::size_t j = 1; j <= i && j <= static_cast<std::size_t>(den_.degree()); ++j)
            acc -= mpq_class(den_.coeff(j)) * c[i - j];
        c[i] = acc / d0;
        c[i].canonicalize();
    }
    std::vector<mpz_class> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (c[i].get_den() != 1)
            throw std::domain_error("series: expansion has non-integer coefficients");
        out[i] = c[i].get_num();
    }
    return out;
}

std::string RationalSeries::str() const {
    if (num_.is_zero()) return "0";
    std::string num_str;
    const IntPolynomial opz = IntPolynomial::one_plus_z();
    if (num_.is_one()) {
        num_str = "1";
    } else if (num_ == opz) {
        num_str = "(1 + z)";
    } else {
        bool power_of_1pz = false;
        if (num_.coeff(0) == 1 && num_.leading() == 1) {
            IntPolynomial p = opz * opz;
            for (long k = 2; p.degree() <= num_.degree(); ++k, p = p * opz) {
                if (p == num_) {
                    num_str = "(1 + z)^" + std::to_string(k);
                    power_of_1pz = true;
                    break;
                }
            }
        }
        if (!power_of_1pz) num_str = "(" + num_.str() + ")";
    }
    if (den_.is_one()) return num_str;
    return num_str + " / (" + den_.str() + ")";
}

nlohmann::ordered_json RationalSeries::to_json() const {
    nlohmann::ordered_json j;
    auto coeffs = [](const IntPolynomial& p) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        if (p.is_zero()) {
            arr.push_back("0");
            return arr;
        }
        for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
        return arr;
    };
    j["num"] = coeffs(num_);
    j["den"] = coeffs(den_);
    return j;
}

RationalSeries RationalSeries::from_json(const nlohmann::json& j) {
    auto poly = [](const nlohmann::json& arr) {
        std::vector<mpz_class> c;
        for (const auto& s : arr) c.emplace_back(s.get<std::string>());
        return IntPolynomial(std::move(c));
    };
    return RationalSeries(poly(j.at("num")), poly(j.at("den")));
}

RationalSeries one_plus_z_pow(unsigned long k) {
    return RationalSeries(IntPolynomial::one_plus_z().pow(k), IntPolynomial(1));
}

namespace {
IntPolynomial regular_factor(bool x_in_m_squared) {
    // 1 - z^2 inside m^2, 1 + z outside
    if (x_in_m_squared) return IntPolynomial(std::vector<mpz_class>{1, 0, -1});
    return IntPolynomial::one_plus_z();
}
}  // namespace

RationalSeries regular_lift(const RationalSeries& quotient, bool x_in_m_squared) {
    return RationalSeries(quotient.num() * regular_factor(x_in_m_squared), quotient.den());
}

RationalSeries regular_descent(const RationalSeries& ring, bool x_in_m_squared) {
    return RationalSeries(ring.num(), ring.den() * regular_factor(x_in_m_squared));
}

RationalSeries socle_lift(const RationalSeries& quotient) {
    // q/(1 - z q) = n / (d - z n)
    return RationalSeries(quotient.num(), quotient.den() - quotient.num().shifted(1));
}

RationalSeries socle_descent(const RationalSeries& ring) {
    return RationalSeries(ring.num(), ring.den() + ring.num().shifted(1));
}

RationalSeries gorenstein_lift(const RationalSeries& quotient) {
    // q/(1 + z^2 q) = n / (d + z^2 n)
    return RationalSeries(quotient.num(), quotient.den() + quotient.num().shifted(2));
}

RationalSeries gorenstein_descent(const RationalSeries& ring) {
    return RationalSeries(ring.num(), ring.den() - ring.num().shifted(2));
}

RationalSeries poincare_closed_form(long d, long h) {
    if (d < 0) throw std::invalid_argument("poincare_closed_form: d must be >= 0");
    if (h < 2) throw std::invalid_argument("poincare_closed_form: h must be >= 2");
    IntPolynomial den(std::vector<mpz_class>{1, -h, 1});
    return RationalSeries(IntPolynomial::one_plus_z().pow(static_cast<unsigned long>(d)), den);
}

Derivation poincare_via_change_of_rings(long d, long h) {
    if (d < 0) throw std::invalid_argument("poincare_via_change_of_rings: d must be >= 0");
    if (h < 2) throw std::invalid_argument("poincare_via_change_of_rings: h must be >= 2");
    Derivation out;
    RationalSeries cur = one_plus_z_pow(2);
    out.steps.push_back({"ambient_regular_series", cur});

    // two regular elements inside the square of the maximal ideal
    cur = regular_descent(regular_descent(cur, true), true);
    out.steps.push_back({"embdim2_gorenstein", cur});

    cur = gorenstein_descent(cur);
    out.steps.push_back({"embdim2_socle_quotient", cur});

    for (long i = 0; i < h - 2; ++i) cur = socle_lift(cur);
    out.steps.push_back({"socle_quotient", cur});

    cur = gorenstein_lift(cur);
    out.steps.push_back({"artinian_gorenstein", cur});

    for (long i = 0; i < d; ++i) cur = regular_lift(cur, false);
    out.steps.push_back({"final", cur});
    out.final = cur;
    return out;
}

}  // namespace artin
