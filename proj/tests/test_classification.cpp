#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artin/builders.hpp"
#include "artin/classification.hpp"

using namespace artin;

namespace {
HilbertFunction hf(std::vector<long> v) { return HilbertFunction(std::move(v)); }
}

TEST_CASE("classify built algebras") {
    for (long h : {2L, 3L, 4L}) {
        auto A = build_almost_stretched<Rational>({h, 4, 2, Rational(1)});
        CHECK(classify(A).kind == GorensteinKind::almost_stretched);
        auto S = build_almost_stretched<Rational>({h, 3, 1, Rational(0), true});
        CHECK(classify(S).kind == GorensteinKind::stretched);
    }
    // a field has m^2 = 0: classified stretched by convention
    FiniteLocalAlgebra<Rational> k({MonomialLabel::unit()}, {{{Rational(1)}}});
    CHECK(classify(k).kind == GorensteinKind::stretched);
    CHECK(classify(k).witness == hf({1}));

    CHECK(kind_from_hilbert(hf({1, 3, 3, 1})) == GorensteinKind::other);
}

TEST_CASE("shape recognition round trip") {
    CHECK(almost_stretched_shape_params(hf({1, 3, 2, 1, 1})) == std::make_pair(4L, 2L));
    CHECK(almost_stretched_shape_params(hf({1, 3, 2, 2, 1})) == std::make_pair(4L, 3L));
    CHECK_FALSE(almost_stretched_shape_params(hf({1, 3, 3, 1})).has_value());
    CHECK_FALSE(almost_stretched_shape_params(hf({1, 3, 1, 1})).has_value());
    CHECK_FALSE(almost_stretched_shape_params(hf({1, 3, 2})).has_value());
    CHECK_FALSE(almost_stretched_shape_params(hf({1, 1, 2, 1})).has_value());

    const std::vector<std::pair<long, long>> st{{3, 2}, {4, 2}, {4, 3}, {5, 3}};
    for (long h : {2L, 3L, 4L}) {
        for (auto [s, t] : st) {
            auto A = build_almost_stretched<Rational>({h, s, t, Rational(1)});
            auto params = almost_stretched_shape_params(hilbert_function(A));
            REQUIRE(params.has_value());
            CHECK(*params == std::make_pair(s, t));
        }
    }

    CHECK(is_stretched_shape(hf({1, 4, 1, 1})));
    CHECK_FALSE(is_stretched_shape(hf({1, 4, 2, 1})));
    CHECK_FALSE(is_stretched_shape(hf({1, 4})));
}

TEST_CASE("enumeration at multiplicity seven") {
    auto e7h3 = possible_gorenstein_hilbert_functions(7, 3);
    REQUIRE(e7h3.size() == 2);
    CHECK(e7h3[0] == hf({1, 3, 2, 1}));
    CHECK(e7h3[1] == hf({1, 3, 1, 1, 1}));

    auto e7h2 = possible_gorenstein_hilbert_functions(7, 2);
    REQUIRE(e7h2.size() == 2);
    CHECK(e7h2[0] == hf({1, 2, 2, 1, 1}));
    CHECK(e7h2[1] == hf({1, 2, 1, 1, 1, 1}));
    for (const auto& f : e7h2) CHECK(f != hf({1, 2, 3, 1}));

    CHECK(possible_gorenstein_hilbert_functions(7, 5) == std::vector<HilbertFunction>{hf({1, 5, 1})});
    CHECK(possible_gorenstein_hilbert_functions(7, 6).empty());  // e = h + 1
}

TEST_CASE("enumeration by codimension gap") {
    for (long h = 2; h <= 6; ++h) {
        CHECK(possible_gorenstein_hilbert_functions(h + 1, h).empty());
        CHECK(possible_gorenstein_hilbert_functions(h + 2, h) ==
              std::vector<HilbertFunction>{hf({1, h, 1})});
        CHECK(possible_gorenstein_hilbert_functions(h + 3, h) ==
              std::vector<HilbertFunction>{hf({1, h, 1, 1})});
        auto e4 = possible_gorenstein_hilbert_functions(h + 4, h);
        REQUIRE(e4.size() == 2);
        CHECK(e4[0] == hf({1, h, 2, 1}));
        CHECK(e4[1] == hf({1, h, 1, 1, 1}));
    }
    CHECK_THROWS_AS(possible_gorenstein_hilbert_functions(3, 3), std::invalid_argument);
}

TEST_CASE("every enumerated shape sums to e and is recognized") {
    for (long h = 2; h <= 6; ++h) {
        for (long e = h + 2; e <= h + 9; ++e) {
            for (const auto& f : possible_gorenstein_hilbert_functions(e, h)) {
                CHECK(f.sum() == e);
                CHECK(f[0] == 1);
                CHECK(f[1] == h);
                CHECK((is_stretched_shape(f) || almost_stretched_shape_params(f).has_value()));
            }
        }
    }
}

TEST_CASE("rationality guarantees") {
    auto g = poincare_rationality_guarantee(7, 2);
    CHECK(g.guaranteed);
    CHECK(g.rule == "multiplicity_le_7");

    g = poincare_rationality_guarantee(14, 10);
    CHECK(g.guaranteed);
    CHECK(g.rule == "codim_gap_le_4");

    g = poincare_rationality_guarantee(3, 2);
    CHECK(g.guaranteed);
    CHECK(g.rule == "minimal_multiplicity");

    g = poincare_rationality_guarantee(26, 20);
    CHECK_FALSE(g.guaranteed);
    CHECK(g.rule == "none");

    // guaranteed whenever e <= 7, for every admissible h
    for (long e = 3; e <= 7; ++e)
        for (long h = 2; h <= e - 1; ++h) CHECK(poincare_rationality_guarantee(e, h).guaranteed);
    // and throughout the h+2..h+4 band
    for (long h = 2; h <= 12; ++h)
        for (long e = h + 2; e <= h + 4; ++e)
            CHECK(poincare_rationality_guarantee(e, h).guaranteed);

    CHECK_THROWS_AS(poincare_rationality_guarantee(2, 2), std::invalid_argument);
}
