#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artin/algebra_json.hpp"
#include "artin/builders.hpp"
#include "artin/resolution.hpp"
#include "artin/series.hpp"

using namespace artin;

namespace {

using Alg = FiniteLocalAlgebra<Rational>;

Alg field_algebra() {
    return Alg({MonomialLabel::unit()}, {{{Rational(1)}}});
}

Alg truncated_power_algebra(long n) {
    nlohmann::ordered_json j;
    j["field"] = "rational";
    auto basis = nlohmann::ordered_json::array();
    basis.push_back("1");
    for (long i = 1; i < n; ++i)
        basis.push_back(i == 1 ? "x1" : "x1^" + std::to_string(i));
    j["basis"] = basis;
    auto table = nlohmann::ordered_json::array();
    for (long i = 0; i < n; ++i) {
        auto row = nlohmann::ordered_json::array();
        for (long k = 0; k < n; ++k) {
            auto coords = nlohmann::ordered_json::array();
            for (long l = 0; l < n; ++l) coords.push_back(i + k == l ? "1" : "0");
            row.push_back(coords);
        }
        table.push_back(row);
    }
    j["table"] = table;
    return algebra_from_json<Rational>(j);
}

std::vector<std::size_t> expanded(const RationalSeries& p, std::size_t n) {
    std::vector<std::size_t> out;
    for (const auto& c : p.expand(n)) out.push_back(static_cast<std::size_t>(c.get_ui()));
    return out;
}

}  // namespace

TEST_CASE("field resolves instantly") {
    auto A = field_algebra();
    auto b = betti_numbers(A, 4);
    CHECK(b == std::vector<std::size_t>{1, 0, 0, 0, 0});
    CHECK(verify_resolution(minimal_resolution(A, 4)).all_pass());
}

TEST_CASE("hypersurface k[x]/(x^n): all Betti numbers are 1") {
    for (long n : {2L, 3L, 4L, 5L}) {
        auto A = truncated_power_algebra(n);
        auto res = minimal_resolution(A, 4);
        CHECK(res.betti == std::vector<std::size_t>{1, 1, 1, 1, 1});
        CHECK(verify_resolution(res).all_pass());
    }
}

TEST_CASE("k[x]/(x^3): the maps alternate between x and x^2") {
    auto A = truncated_power_algebra(3);
    auto res = minimal_resolution(A, 3);
    auto x = A.element_by_label("x1");
    auto x2 = A.element_by_label("x1^2");
    CHECK(res.maps[0].entry(A, 0, 0) == x);
    CHECK(res.maps[1].entry(A, 0, 0) == x2);
    CHECK(res.maps[2].entry(A, 0, 0) == x);

    // consistent with the regular-element transform: (1+z)/(1-z^2) = 1/(1-z)
    auto p = regular_descent(one_plus_z_pow(1), true);
    CHECK(p.expand(3) == std::vector<mpz_class>{1, 1, 1, 1});
}

TEST_CASE("almost stretched h=3: betti matches 1/(1-3z+z^2)") {
    auto A = build_almost_stretched<Rational>({3, 3, 2, Rational(0)});
    auto res = minimal_resolution(A, 5);
    CHECK(res.betti == std::vector<std::size_t>{1, 3, 8, 21, 55, 144});
    CHECK_FALSE(res.truncated);
    CHECK(res.betti == expanded(poincare_closed_form(0, 3), 5));
    CHECK(verify_resolution(res).all_pass());
}

TEST_CASE("h=2 complete intersection: betti matches 1/(1-z)^2") {
    auto A = build_almost_stretched<Rational>({2, 3, 2, Rational(0)});
    CHECK(betti_numbers(A, 4) == std::vector<std::size_t>{1, 2, 3, 4, 5});
}

TEST_CASE("intermediate rings of the derivation") {
    auto SV = build_embdim2_gorenstein<Rational>(3, 2, Rational(0));
    CHECK(betti_numbers(SV, 4) == std::vector<std::size_t>{1, 2, 3, 4, 5});

    auto SL = build_embdim2_socle_quotient<Rational>(3, 2, Rational(0));
    CHECK(betti_numbers(SL, 4) == std::vector<std::size_t>{1, 2, 4, 8, 16});

    for (long h : {2L, 3L, 4L}) {
        auto RK = build_socle_quotient<Rational>({h, 3, 2, Rational(0)});
        std::vector<std::size_t> expect{1};
        for (int i = 1; i <= 3; ++i) expect.push_back(expect.back() * static_cast<std::size_t>(h));
        CHECK(betti_numbers(RK, 3) == expect);
    }
}

TEST_CASE("b_1 equals the embedding dimension") {
    auto A = build_almost_stretched<Rational>({4, 4, 3, Rational(1)});
    auto res = minimal_resolution(A, 1);
    CHECK(res.betti[1] == static_cast<std::size_t>(embedding_dimension(A)));
    CHECK(res.maps[0].source_rank == 4);
    for (std::size_t r = 0; r < 4; ++r)
        CHECK(res.maps[0].entry(A, 0, r).unit_coordinate().is_zero());
}

TEST_CASE("betti satisfies the h-recurrence and ignores a") {
    std::vector<std::vector<std::size_t>> seen;
    for (long a : {0L, 1L, 2L, 5L}) {
        auto A = build_almost_stretched<Rational>({3, 4, 2, Rational(a)});
        seen.push_back(betti_numbers(A, 4));
    }
    for (const auto& b : seen) {
        CHECK(b == seen.front());
        for (std::size_t i = 2; i < b.size(); ++i) CHECK(b[i] == 3 * b[i - 1] - b[i - 2]);
    }
}

TEST_CASE("verify_resolution flags a corrupted map") {
    auto A = build_almost_stretched<Rational>({3, 3, 2, Rational(0)});
    auto res = minimal_resolution(A, 3);
    REQUIRE(verify_resolution(res).all_pass());

    // inject a unit entry into d_2
    res.maps[1].columns[0] = SparseVec<Rational>::unit(0);
    auto rep = verify_resolution(res);
    CHECK_FALSE(rep.all_pass());
    bool minimality_failed = false;
    for (const auto& c : rep.checks)
        if (c.name == "minimality_entries_in_m" && !c.pass) minimality_failed = true;
    CHECK(minimality_failed);
}

TEST_CASE("dim_cap truncates instead of failing") {
    auto A = build_almost_stretched<Rational>({3, 3, 2, Rational(0)});
    auto res = minimal_resolution(A, 5, 60);
    CHECK(res.truncated);
    CHECK(res.betti.size() < 6);
    std::vector<std::size_t> expect{1, 3, 8, 21, 55, 144};
    expect.resize(res.betti.size());
    CHECK(res.betti == expect);
}

TEST_CASE("betti export formats") {
    auto A = build_almost_stretched<Rational>({2, 3, 2, Rational(0)});
    auto res = minimal_resolution(A, 2);
    CHECK(betti_csv(res) == "i,b_i\n0,1\n1,2\n2,3\n");
    auto j = resolution_to_json(res);
    CHECK(j["betti"] == nlohmann::ordered_json({1, 2, 3}));
    CHECK(j["maps"].size() == 2);
    CHECK(j["maps"][0]["target_rank"] == 1);
    CHECK(j["maps"][0]["source_rank"] == 2);
    CHECK(j["maps"][0]["entries"][0].size() == 2);
}

TEST_CASE("prime-field resolution agrees with the rational one") {
    GFp::set_modulus(10007);
    auto Ap = build_almost_stretched<GFp>({3, 3, 2, Rational(1)});
    auto Aq = build_almost_stretched<Rational>({3, 3, 2, Rational(1)});
    CHECK(betti_numbers(Ap, 4) == betti_numbers(Aq, 4));
    CHECK(verify_resolution(minimal_resolution(Ap, 4)).all_pass());
}

TEST_CASE("stretched t=1 resolutions match the same closed form") {
    for (long h : {2L, 3L}) {
        auto A = build_almost_stretched<Rational>({h, 3, 1, Rational(0), true});
        CHECK(betti_numbers(A, 4) == expanded(poincare_closed_form(0, h), 4));
    }
}
