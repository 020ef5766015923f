#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artin/series.hpp"

using namespace artin;

namespace {

IntPolynomial poly(std::vector<long> c) {
    std::vector<mpz_class> v(c.begin(), c.end());
    return IntPolynomial(std::move(v));
}

RationalSeries series(std::vector<long> num, std::vector<long> den) {
    return RationalSeries(poly(std::move(num)), poly(std::move(den)));
}

std::vector<mpz_class> ints(std::vector<long> v) { return {v.begin(), v.end()}; }

// random series with unit denominator constant term (the transform domain)
RationalSeries random_series(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> c(-3, 3);
    std::uniform_int_distribution<int> deg(0, 3);
    std::vector<long> num(static_cast<std::size_t>(deg(rng)) + 1);
    std::vector<long> den(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : num) x = c(rng);
    for (auto& x : den) x = c(rng);
    if (num.empty() || (num.size() == 1 && num[0] == 0)) num = {1};
    den[0] = 1;
    return series(std::move(num), std::move(den));
}

}  // namespace

TEST_CASE("polynomial basics") {
    CHECK(poly({1, 2, 1}) == IntPolynomial::one_plus_z().pow(2));
    CHECK(poly({0}).is_zero());
    CHECK(poly({1, 2, 1}).str() == "1 + 2z + z^2");
    CHECK(poly({1, -3, 1}).str() == "1 - 3z + z^2");
    CHECK(poly({0, 1}).str() == "z");
    CHECK(poly({-1, 0, 6}).str() == "-1 + 6z^2");
    CHECK(poly_gcd(poly({1, 2, 1}), poly({1, 1})) == poly({1, 1}));
    CHECK(poly_gcd(poly({-2, -2}), poly({0})) == poly({1, 1}));
    CHECK(divide_exact(poly({1, 2, 1}), poly({1, 1})) == poly({1, 1}));
    CHECK_THROWS_AS(divide_exact(poly({1, 1, 1}), poly({1, 1})), std::domain_error);
}

TEST_CASE("series canonical form") {
    // (1+z)^2/(1-z^2)^2 == 1/(1-z)^2
    auto lhs = series({1, 2, 1}, {1, 0, -2, 0, 1});
    auto rhs = series({1}, {1, -2, 1});
    CHECK(lhs == rhs);
    CHECK(lhs.num() == poly({1}));
    CHECK(lhs.den() == poly({1, -2, 1}));

    // joint content and sign normalization
    CHECK(series({2, 2}, {-2}) == series({-1, -1}, {1}));
    CHECK(series({2, 2}, {-2}).den().coeff(0) == 1);

    CHECK_THROWS_AS(series({1}, {0, 1}), std::domain_error);
}

TEST_CASE("series arithmetic") {
    auto p = series({3, 1}, {1, 5});
    CHECK(p + RationalSeries() == p);
    auto geom = series({1}, {1, -1});
    CHECK(geom * series({1, -1}, {1}) == RationalSeries(1));
    CHECK(p / p == RationalSeries(1));
    CHECK_THROWS_AS(p / RationalSeries(), std::domain_error);
}

TEST_CASE("expand") {
    CHECK(series({1}, {1, -2, 1}).expand(4) == ints({1, 2, 3, 4, 5}));
    CHECK(series({1}, {1, -3, 1}).expand(5) == ints({1, 3, 8, 21, 55, 144}));
    CHECK(series({1, 1}, {1, 0, -1}).expand(3) == ints({1, 1, 1, 1}));

    // independent route: the denominator recurrence c_i = 3 c_(i-1) - c_(i-2)
    std::vector<mpz_class> rec{1, 3};
    for (int i = 2; i <= 5; ++i) rec.push_back(3 * rec[i - 1] - rec[i - 2]);
    CHECK(series({1}, {1, -3, 1}).expand(5) == rec);
}

TEST_CASE("regular element transform") {
    // d lifts off m^2 applied to the field's series give (1+z)^d
    RationalSeries p(1);
    for (int d = 1; d <= 4; ++d) {
        p = regular_lift(p, false);
        CHECK(p == one_plus_z_pow(static_cast<unsigned long>(d)));
    }

    // (1+z)^2 descended twice inside m^2: (1+z)^2/(1-z^2)^2 = 1/(1-z)^2
    auto q = regular_descent(regular_descent(one_plus_z_pow(2), true), true);
    CHECK(q == series({1}, {1, -2, 1}));

    // single descent inside m^2 of (1+z)^2: (1+z)/(1-z)
    CHECK(regular_descent(one_plus_z_pow(2), true) == series({1, 1}, {1, -1}));
}

TEST_CASE("socle element transform") {
    CHECK(socle_lift(series({1}, {1, -2})) == series({1}, {1, -3}));
    // h-2 lifts take 1/(1-2z) to 1/(1-hz)
    for (long h = 2; h <= 8; ++h) {
        auto p = series({1}, {1, -2});
        for (long i = 0; i < h - 2; ++i) p = socle_lift(p);
        CHECK(p == series({1}, {1, -h}));
    }
}

TEST_CASE("gorenstein socle transform") {
    CHECK(gorenstein_lift(series({1}, {1, -3})) == series({1}, {1, -3, 1}));
    CHECK(gorenstein_descent(series({1}, {1, -2, 1})) == series({1}, {1, -2}));
}

TEST_CASE("transform round trips on random series") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 200; ++it) {
        auto p = random_series(rng);
        CHECK(regular_lift(regular_descent(p, true), true) == p);
        CHECK(regular_descent(regular_lift(p, false), false) == p);
        CHECK(socle_descent(socle_lift(p)) == p);
        CHECK(socle_lift(socle_descent(p)) == p);
        CHECK(gorenstein_descent(gorenstein_lift(p)) == p);
        CHECK(gorenstein_lift(gorenstein_descent(p)) == p);
    }
}

TEST_CASE("closed form") {
    CHECK(poincare_closed_form(0, 3) == series({1}, {1, -3, 1}));
    CHECK(poincare_closed_form(2, 3) == series({1, 2, 1}, {1, -3, 1}));
    // h = 2 agrees with the complete intersection form (1+z)^2/(1-z^2)^2
    CHECK(poincare_closed_form(0, 2) == series({1, 2, 1}, {1, 0, -2, 0, 1}));
    CHECK_THROWS_AS(poincare_closed_form(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(poincare_closed_form(0, 1), std::invalid_argument);
}

TEST_CASE("change-of-rings derivation replays the closed form") {
    for (long h = 2; h <= 10; ++h) {
        for (long d = 0; d <= 3; ++d) {
            auto der = poincare_via_change_of_rings(d, h);
            CHECK(der.final == poincare_closed_form(d, h));
            REQUIRE(der.find("embdim2_gorenstein") != nullptr);
            REQUIRE(der.find("embdim2_socle_quotient") != nullptr);
            REQUIRE(der.find("socle_quotient") != nullptr);
            REQUIRE(der.find("artinian_gorenstein") != nullptr);
            CHECK(*der.find("embdim2_gorenstein") == series({1}, {1, -2, 1}));
            CHECK(*der.find("embdim2_socle_quotient") == series({1}, {1, -2}));
            CHECK(*der.find("socle_quotient") == series({1}, {1, -h}));
            CHECK(*der.find("artinian_gorenstein") == series({1}, {1, -h, 1}));
        }
    }
    // degenerate h: no socle lifts, final 1/(1-2z+z^2)
    auto der = poincare_via_change_of_rings(0, 2);
    CHECK(*der.find("socle_quotient") == *der.find("embdim2_socle_quotient"));
    CHECK(der.final == series({1}, {1, -2, 1}));
}

TEST_CASE("closed form equals d regular lifts of the Artinian form") {
    for (long h = 2; h <= 6; ++h) {
        auto p = poincare_closed_form(0, h);
        for (long d = 1; d <= 3; ++d) {
            p = regular_lift(p, false);
            CHECK(p == poincare_closed_form(d, h));
        }
    }
}

TEST_CASE("closed-form expansion satisfies the h-recurrence") {
    for (long h = 2; h <= 10; ++h) {
        auto c = poincare_closed_form(0, h).expand(8);
        CHECK(c[0] == 1);
        CHECK(c[1] == h);
        for (std::size_t i = 2; i < c.size(); ++i) CHECK(c[i] == h * c[i - 1] - c[i - 2]);
    }
}

TEST_CASE("serialization") {
    CHECK(series({1}, {1, -3, 1}).str() == "1 / (1 - 3z + z^2)");
    CHECK(series({1, 1}, {1, -2, 1}).str() == "(1 + z) / (1 - 2z + z^2)");
    CHECK(series({1, 2, 1}, {1, -3, 1}).str() == "(1 + z)^2 / (1 - 3z + z^2)");
    CHECK(series({1, 3}, {1}).str() == "(1 + 3z)");
    CHECK(one_plus_z_pow(2).str() == "(1 + z)^2");
    CHECK(RationalSeries(1).str() == "1");
    CHECK(RationalSeries().str() == "0");

    auto p = series({1, 2, 1}, {1, -3, 1});
    auto j = p.to_json();
    CHECK(j["num"] == nlohmann::ordered_json({"1", "2", "1"}));
    CHECK(j["den"] == nlohmann::ordered_json({"1", "-3", "1"}));
    CHECK(RationalSeries::from_json(j) == p);
}
