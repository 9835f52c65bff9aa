#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <algorithm>

#include "lieb/catalog.hpp"
#include "lieb/errors.hpp"
#include "test_util.hpp"

using namespace lieb;

namespace {

const SamplingConfig kCfg{};

std::vector<std::size_t> ones(std::size_t n) { return std::vector<std::size_t>(n, 1); }

} // namespace

TEST_CASE("jordan_type_of") {
    LieAlgebra g = catalog_build("g_1_0_k", 5);
    CHECK(jordan_type_of(g, zero_vec(5)).parts == ones(5));
    CHECK(jordan_type_of(g, basis_vec(5, 1)).parts == std::vector<std::size_t>{3, 1, 1});

    LieAlgebra h = catalog_build("g_1_0_0_k", 5);
    CHECK(jordan_type_of(h, basis_vec(5, 1)).parts == std::vector<std::size_t>{4, 1});
}

TEST_CASE("lex order on jordan types") {
    CHECK(lex_less(JordanType{{2, 2, 1, 1}}, JordanType{{3, 1, 1, 1}}));
    CHECK(lex_less(JordanType{{3, 1, 1, 1}}, JordanType{{3, 2, 1}}));
    CHECK(!lex_less(JordanType{{3, 2, 1}}, JordanType{{3, 2, 1}}));
    CHECK(to_string(JordanType{{3, 2, 1}}) == "(3,2,1)");
}

TEST_CASE("breadth certificates") {
    CHECK(breadth(catalog_build("abelian", 5), kCfg).breadth == 0);

    for (std::size_t n = 4; n <= 7; ++n) {
        auto cert = breadth(catalog_build("filiform", n), kCfg);
        CHECK(cert.breadth == n - 2);
        CHECK(rank(ad_matrix(catalog_build("filiform", n), cert.witness)) == cert.breadth);
    }

    CHECK(breadth(catalog_build("n7_120", 7), kCfg).breadth == 3);
}

TEST_CASE("breadth witness rank is exact and certificate is deterministic") {
    LieAlgebra g = catalog_build("n6_15", 6);
    auto c1 = breadth(g, kCfg);
    auto c2 = breadth(g, kCfg);
    CHECK(c1.breadth == c2.breadth);
    CHECK(c1.witness == c2.witness);
    CHECK(c1.samples_tried == c2.samples_tried);
    CHECK(rank(ad_matrix(g, c1.witness)) == c1.breadth);
}

TEST_CASE("breadth on an ideal") {
    LieAlgebra g = catalog_build("g_1_0_k", 5); // brackets [X1,X2]=X3, [X1,X3]=X4

    CHECK(breadth_on_ideal(g, Subspace::full(5), kCfg).breadth == breadth(g, kCfg).breadth);
    CHECK(breadth_on_ideal(g, center(g), kCfg).breadth == 0);

    // Only [X1,X3]=X4 lands in span{e3,e4,e5}, so the restricted rank is 1.
    Subspace tail(5, {basis_vec(5, 3), basis_vec(5, 4), basis_vec(5, 5)});
    CHECK(breadth_on_ideal(g, tail, kCfg).breadth == 1);

    // On span{e2,e3,e4} the chain e2 -> e3 -> e4 gives rank 2.
    Subspace mid(5, {basis_vec(5, 2), basis_vec(5, 3), basis_vec(5, 4)});
    CHECK(breadth_on_ideal(g, mid, kCfg).breadth == 2);

    CHECK_THROWS_AS(breadth_on_ideal(g, Subspace(5, {basis_vec(5, 1)}), kCfg),
                    not_an_ideal_error);
}

TEST_CASE("characteristic sequences of model algebras") {
    CHECK(characteristic_sequence(catalog_build("abelian", 6), kCfg).parts.parts == ones(6));
    CHECK(characteristic_sequence(catalog_build("g_2_k", 6), kCfg).parts.parts ==
          std::vector<std::size_t>{2, 2, 1, 1});
    CHECK(characteristic_sequence(catalog_build("n6_16", 6), kCfg).parts.parts ==
          std::vector<std::size_t>{3, 2, 1});
}

TEST_CASE("characteristic witness lies outside the derived subalgebra") {
    LieAlgebra g = catalog_build("n7_122", 7);
    auto seq = characteristic_sequence(g, kCfg);
    CHECK(!derived_subalgebra(g).contains(seq.witness));
    CHECK(jordan_type_of(g, seq.witness) == seq.parts);

    // the sampled maximum dominates other admissible samples
    std::mt19937_64 rng(17);
    Subspace derived = derived_subalgebra(g);
    for (int rep = 0; rep < 40; ++rep) {
        Vec x = testutil::random_vec(rng, 7, 6);
        if (derived.contains(x)) continue;
        CHECK(!lex_less(seq.parts, jordan_type_of(g, x)));
    }
}

TEST_CASE("breadth_from_sequence") {
    CHECK(breadth_from_sequence(JordanType{{1, 1, 1, 1}}) == 0);
    CHECK(breadth_from_sequence(JordanType{{3, 2, 1, 1}}) == 3);
    CHECK(breadth_from_sequence(JordanType{{2, 2, 1, 1, 1}}) == 2);
    CHECK(breadth_from_sequence(JordanType{{4, 1}}) == 3);
    CHECK_THROWS_AS(breadth_from_sequence(JordanType{}), empty_sequence_error);
}

TEST_CASE("verify_theorem_b") {
    auto rep = verify_theorem_b(catalog_build("g_1_0_k", 5), kCfg);
    CHECK(rep.pass());
    CHECK(rep.breadth_value == 2);
    CHECK(rep.sequence.parts == std::vector<std::size_t>{3, 1, 1});
    CHECK(rep.bound_checked);

    auto ab = verify_theorem_b(catalog_build("abelian", 4), kCfg);
    CHECK(ab.pass());
    CHECK(!ab.bound_checked); // Z = g, bound degenerate

    auto n117 = verify_theorem_b(catalog_build("n7_117", 7, {{"alpha", Rational(1)}}), kCfg);
    CHECK(n117.pass());
    CHECK(n117.breadth_value == 3);
    CHECK(n117.sequence.parts == std::vector<std::size_t>{3, 2, 1, 1});
}

TEST_CASE("classify_b2") {
    CHECK(classify_b2(catalog_build("g_2_k", 6), kCfg) == BreadthTwoClass::TwoStep22);
    CHECK(classify_b2(catalog_build("g_1_0_k", 6), kCfg) == BreadthTwoClass::ThreeStep31);
    CHECK(classify_b2(catalog_build("n7_120", 7), kCfg) == BreadthTwoClass::NotBreadth2);
    CHECK(classify_b2(catalog_build("abelian", 4), kCfg) == BreadthTwoClass::NotBreadth2);
}

TEST_CASE("two-step and three-step breadth formulas") {
    // 2-step: breadth = number of 2s; 3-step: breadth = 2*p3 + p2.
    for (const char* key : {"g_2_k", "g_3_k"}) {
        for (std::size_t n : {7, 8}) {
            LieAlgebra g = catalog_build(key, n);
            auto seq = characteristic_sequence(g, kCfg).parts;
            std::size_t twos = std::count(seq.parts.begin(), seq.parts.end(), 2);
            CHECK(breadth(g, kCfg).breadth == twos);
        }
    }
    for (const char* key : {"n6_11", "n6_13", "n7_94", "n7_107"}) {
        std::size_t n = key[1] == '6' ? 6 : 7;
        LieAlgebra g = catalog_build(key, n);
        CHECK(nilpotency_class(g) == 3);
        auto seq = characteristic_sequence(g, kCfg).parts;
        std::size_t p3 = std::count(seq.parts.begin(), seq.parts.end(), 3);
        std::size_t p2 = std::count(seq.parts.begin(), seq.parts.end(), 2);
        CHECK(breadth(g, kCfg).breadth == 2 * p3 + p2);
    }
}

TEST_CASE("rank at the characteristic witness matches the breadth formula") {
    for (const char* key : {"g_1_1_k", "g_1_0_0_k"}) {
        LieAlgebra g = catalog_build(key, 7);
        auto seq = characteristic_sequence(g, kCfg);
        CHECK(rank(ad_matrix(g, seq.witness)) == breadth_from_sequence(seq.parts));
    }
}
