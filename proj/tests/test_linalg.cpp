#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artin/matrix.hpp"
#include "artin/subspace.hpp"

using namespace artin;

namespace {

Matrix<Rational> mat(std::size_t r, std::size_t c, std::vector<long> entries) {
    std::vector<Rational> e;
    e.reserve(entries.size());
    for (long x : entries) e.emplace_back(x);
    return Matrix<Rational>(r, c, std::move(e));
}

SparseVec<Rational> vec(std::vector<long> entries) {
    std::vector<Rational> e;
    e.reserve(entries.size());
    for (long x : entries) e.emplace_back(x);
    return SparseVec<Rational>::from_dense(e);
}

Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    Matrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

Subspace<Rational> random_subspace(std::mt19937_64& rng, std::size_t ambient) {
    std::uniform_int_distribution<std::size_t> count(0, ambient);
    std::uniform_int_distribution<long> entry(-2, 2);
    std::vector<SparseVec<Rational>> gens;
    const std::size_t n = count(rng);
    for (std::size_t g = 0; g < n; ++g) {
        std::vector<Rational> v(ambient);
        for (auto& x : v) x = Rational(entry(rng));
        gens.push_back(SparseVec<Rational>::from_dense(v));
    }
    return Subspace<Rational>::span(ambient, gens);
}

}  // namespace

TEST_CASE("rref: identity") {
    auto r = rref(Matrix<Rational>::identity(2));
    CHECK(r.rank == 2);
    CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
    CHECK(r.reduced == Matrix<Rational>::identity(2));
}

TEST_CASE("rref: zero matrix") {
    auto r = rref(Matrix<Rational>(3, 4));
    CHECK(r.rank == 0);
    CHECK(r.pivot_columns.empty());
    CHECK(r.reduced == Matrix<Rational>(3, 4));
}

TEST_CASE("rref: rank-one 2x2") {
    auto r = rref(mat(2, 2, {1, 2, 2, 4}));
    CHECK(r.rank == 1);
    CHECK(r.reduced == mat(2, 2, {1, 2, 0, 0}));
    CHECK(r.pivot_columns == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent on random matrices") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 50; ++it) {
        auto m = random_matrix(rng, 1 + it % 5, 1 + (it * 7) % 6);
        auto r1 = rref(m);
        auto r2 = rref(r1.reduced);
        CHECK(r1.reduced == r2.reduced);
        CHECK(r1.rank == r2.rank);
    }
}

TEST_CASE("kernel: identity has zero kernel") {
    auto k = kernel_basis(Matrix<Rational>::identity(3));
    CHECK(k.dim() == 0);
    CHECK(k.ambient_dim() == 3);
}

TEST_CASE("kernel: zero map has full kernel") {
    auto k = kernel_basis(Matrix<Rational>(2, 5));
    CHECK(k.dim() == 5);
    CHECK(k == Subspace<Rational>::full(5));
}

TEST_CASE("kernel: single row [1,2]") {
    auto k = kernel_basis(mat(1, 2, {1, 2}));
    REQUIRE(k.dim() == 1);
    // span{(-2,1)} canonicalized: lead coefficient 1
    CHECK(k.basis()[0].to_dense(2) == std::vector<Rational>{Rational(1), Rational(-1, 2)});
    CHECK(k.contains_vector(vec({-2, 1})));
}

TEST_CASE("kernel members multiply to zero; rank-nullity") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 60; ++it) {
        auto m = random_matrix(rng, 1 + it % 4, 1 + (it * 5) % 6);
        auto r = rref(m);
        auto k = kernel_basis(m);
        CHECK(r.rank + k.dim() == m.cols());
        for (const auto& row : k.basis()) {
            auto out = m.apply(row.to_dense(m.cols()));
            for (const auto& c : out) CHECK(c.is_zero());
        }
    }
}

TEST_CASE("complement: sub == ambient gives empty list") {
    auto v = Subspace<Rational>::span(3, {vec({1, 0, 2}), vec({0, 1, 0})});
    CHECK(complement_basis(v, v).empty());
}

TEST_CASE("complement: zero inside a 2-dim space") {
    auto ambient = Subspace<Rational>::span(2, {vec({1, 0}), vec({0, 1})});
    auto comp = complement_basis(Subspace<Rational>(2), ambient);
    REQUIRE(comp.size() == 2);
    CHECK(comp[0] == vec({1, 0}));
    CHECK(comp[1] == vec({0, 1}));
}

TEST_CASE("complement: deterministic pivot rule") {
    // sub = span{e1+e2} inside the full 2-space: the ambient row with the
    // non-pivot lead is e2
    auto sub = Subspace<Rational>::span(2, {vec({1, 1})});
    auto comp = complement_basis(sub, Subspace<Rational>::full(2));
    REQUIRE(comp.size() == 1);
    CHECK(comp[0] == vec({0, 1}));
}

TEST_CASE("complement: containment is enforced") {
    auto sub = Subspace<Rational>::span(2, {vec({1, 1})});
    auto ambient = Subspace<Rational>::span(2, {vec({1, 0})});
    CHECK_THROWS_AS(complement_basis(sub, ambient), std::invalid_argument);
}

TEST_CASE("complement joins sub to span ambient") {
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 40; ++it) {
        auto ambient = random_subspace(rng, 5);
        auto sub = intersect(ambient, random_subspace(rng, 5));
        auto comp = complement_basis(sub, ambient);
        CHECK(sub.dim() + comp.size() == ambient.dim());
        auto joined = sub.basis();
        joined.insert(joined.end(), comp.begin(), comp.end());
        CHECK(Subspace<Rational>::span(5, joined) == ambient);
    }
}

TEST_CASE("subspace ops: sum idempotent, coordinate intersection, membership") {
    auto v = Subspace<Rational>::span(2, {vec({1, 1})});
    CHECK(sum(v, v) == v);

    auto e1 = Subspace<Rational>::span(2, {vec({1, 0})});
    auto e2 = Subspace<Rational>::span(2, {vec({0, 1})});
    CHECK(intersect(e1, e2).dim() == 0);

    CHECK_FALSE(contains(v, vec({1, 0})));
    CHECK(contains(v, vec({2, 2})));
}

TEST_CASE("subspace ops: ambient mismatch throws") {
    auto a = Subspace<Rational>::full(2);
    auto b = Subspace<Rational>::full(3);
    CHECK_THROWS_AS(sum(a, b), std::invalid_argument);
    CHECK_THROWS_AS(intersect(a, b), std::invalid_argument);
}

TEST_CASE("Grassmann identity on random subspace pairs") {
    std::mt19937_64 rng(777);
    for (int it = 0; it < 60; ++it) {
        auto a = random_subspace(rng, 6);
        auto b = random_subspace(rng, 6);
        auto s = sum(a, b);
        auto i = intersect(a, b);
        CHECK(a.dim() + b.dim() == s.dim() + i.dim());
        CHECK(s.contains_subspace(a));
        CHECK(s.contains_subspace(b));
        CHECK(a.contains_subspace(i));
        CHECK(b.contains_subspace(i));
    }
}

TEST_CASE("exact arithmetic at 256-bit scale") {
    std::mt19937_64 rng(31337);
    auto big = [&rng]() {
        std::string digits = "1";
        std::uniform_int_distribution<int> d(0, 9);
        for (int i = 0; i < 77; ++i) digits += static_cast<char>('0' + d(rng));  // ~256 bits
        return mpz_class(digits);
    };
    for (int it = 0; it < 20; ++it) {
        Rational a(big(), big());
        Rational inv = Rational(a.denominator(), a.numerator());
        CHECK((a * inv).is_one());
        CHECK((a / a).is_one());
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("GFp arithmetic and kernels") {
    GFp::set_modulus(10007);
    CHECK((GFp(3) * GFp(3336)).is_one() == (3 * 3336 % 10007 == 1));
    CHECK((GFp(5) / GFp(5)).is_one());
    CHECK((GFp(10006) + GFp(1)).is_zero());

    Matrix<GFp> m(1, 2);
    m.at(0, 0) = GFp(1);
    m.at(0, 1) = GFp(2);
    auto k = kernel_basis(m);
    REQUIRE(k.dim() == 1);
    auto v = k.basis()[0].to_dense(2);
    CHECK((m.at(0, 0) * v[0] + m.at(0, 1) * v[1]).is_zero());
}
