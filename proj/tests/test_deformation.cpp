#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <algorithm>

#include "lieb/catalog.hpp"
#include "lieb/errors.hpp"
#include "test_util.hpp"

using namespace lieb;

namespace {

const SamplingConfig kCfg{};

Cochain2 single(std::size_t n, BasisIndex i, BasisIndex j, BasisIndex k, Rational c = 1) {
    Cochain2 phi(n);
    phi.add_term(i, j, k, c);
    return phi;
}

// Random parameter draws for the 2-step double-block cocycle components.
G2CocycleParams random_g2_cocycle(std::mt19937_64& rng, std::size_t n, G2Component comp) {
    G2CocycleParams p;
    std::size_t max_j = comp == G2Component::C2 ? n - 1 : n;
    for (int tries = 0; tries < 6; ++tries) {
        BasisIndex i = 2 + rng() % (max_j - 2);
        BasisIndex j = i + 1 + rng() % (max_j - i);
        if (i == 3 || i == 5 || j == 3 || j == 5) continue;
        if (comp == G2Component::C2 && i == 2 && j == 4) continue;
        (rng() % 2 ? p.a3 : p.a5)[{i, j}] = testutil::rand_int(rng, -3, 3);
    }
    return p;
}

G3CocycleParams random_g3_cocycle(std::mt19937_64& rng, std::size_t n, G3Family family) {
    G3CocycleParams p;
    std::vector<IndexPair> low_pairs{{2, 4}, {4, 6}};
    if (family != G3Family::Phi2) low_pairs.push_back({2, 6});
    for (const auto& pr : low_pairs) {
        std::array<Rational, 3> coeffs;
        for (auto& c : coeffs) c = testutil::rand_int(rng, -3, 3);
        p.low[pr] = coeffs;
    }
    std::size_t high_min = family == G3Family::Phi2 ? 9 : 8;
    if (family != G3Family::Phi1 && n > high_min)
        for (BasisIndex s = high_min; s <= n; ++s)
            for (BasisIndex l = s + 1; l <= n; ++l)
                if (rng() % 2) p.high[{s, l}] = testutil::rand_int(rng, -3, 3);
    return p;
}

} // namespace

TEST_CASE("linear_deform") {
    LieAlgebra base = catalog_build("g_1_0_k", 5);
    Cochain2 phi = single(5, 2, 3, 5);

    CHECK(linear_deform(base, phi, 0).table() == base.table());
    // t=1 reproduces the breadth-2 list entry with [X2,X3]=X5
    CHECK(linear_deform(base, phi, 1).table() == catalog_build("seq31_2", 5).table());

    LieAlgebra g2 = catalog_build("g_2_k", 7);
    G2CocycleParams params;
    Cochain2 c2phi = g2_cocycle(7, G2Component::C2, params);
    LieAlgebra deformed = linear_deform(g2, c2phi, 1);
    CHECK(jacobi_check(deformed).empty());
    CHECK(deformed.table().basis_value(2, 4) == SparseVec{{7, Rational(1)}});
    CHECK(classify_b2(deformed, kCfg) == BreadthTwoClass::TwoStep22);

    CHECK_THROWS_AS(linear_deform(base, Cochain2(4), 1), dimension_error);
}

TEST_CASE("is_Z2_CH") {
    LieAlgebra g2 = catalog_build("g_2_k", 6);
    CHECK(is_Z2_CH(g2.table(), Cochain2(6)));

    G2CocycleParams p;
    p.a3[{2, 4}] = 1;
    CHECK(is_Z2_CH(g2.table(), g2_cocycle(6, G2Component::C1, p)));

    CHECK(!is_Z2_CH(g2.table(), single(6, 2, 3, 2)));
}

TEST_CASE("check_line_system") {
    LieAlgebra base = catalog_build("g_1_0_k", 5);

    CHECK(check_line_system(base.table(), Cochain2(5)).pass());

    Cochain2 good = single(5, 2, 3, 5);
    CHECK(check_line_system(base.table(), good).pass());

    // line-system pass implies Jacobi of base + t*phi for any t
    std::vector<Rational> ts{Rational(1), Rational(-1), Rational(1), Rational(3)};
    ts[2] /= 2;
    for (const Rational& t : ts) CHECK(jacobi_check(linear_deform(base, good, t)).empty());

    Cochain2 bad = single(5, 2, 3, 2);
    SystemReport rep = check_line_system(base.table(), bad);
    CHECK(!rep.pass());
    CHECK(rep.conditions[0].name == "delta_C");
    CHECK(!rep.conditions[0].ok);
    CHECK(rep.conditions[0].failure_count > 0);
    CHECK(!rep.conditions[0].failures.empty());
    CHECK(jacobi_check(linear_deform(base, bad, 1)).size() > 0);
}

TEST_CASE("check_3step_system") {
    LieAlgebra base = catalog_build("g_1_1_k", 6);

    CHECK(check_3step_system(base.table(), Cochain2(6)).pass());
    CHECK(check_3step_system(base.table(), single(6, 2, 3, 4)).pass()); // the n6_16 perturbation

    SystemReport rep = check_3step_system(base.table(), single(6, 2, 3, 1));
    CHECK(!rep.pass());
}

TEST_CASE("every dimension-6 and dimension-7 list entry solves the 3-step system") {
    for (const auto& e : catalog_entries()) {
        if (e.key.rfind("n6_", 0) != 0 && e.key.rfind("n7_", 0) != 0) continue;
        if (e.key.rfind("n7_12", 0) == 0) continue; // the (2,2,2,1) list is 2-step
        std::size_t n = e.key.rfind("n6_", 0) == 0 ? 6 : 7;
        Params params = e.key == "n7_117" ? Params{{"alpha", Rational(2)}} : Params{};
        LieAlgebra g = catalog_build(e.key, n, params);
        LieAlgebra base = catalog_build("g_1_1_k", n);
        Cochain2 phi = g.table().plus(base.table().scaled(-1));
        CHECK(check_3step_system(base.table(), phi).pass());

        ShapeReport shape = matches_3step_shape(phi);
        CHECK(shape.ok);
    }
}

TEST_CASE("check_4step_system") {
    LieAlgebra base = catalog_build("g_1_0_0_k", 7);
    CHECK(check_4step_system(base.table(), Cochain2(7)).pass());

    Seq41Params one;
    one.a = 1;
    one.ak[6] = 1;
    CHECK(check_4step_system(base.table(), seq41_cochain(7, Seq41Family::One, one)).pass());

    // family-Two shape violating the closure constraint fails the system
    Seq41Params bad;
    bad.dk[6] = 1;
    bad.c[{6, 7}] = 1;
    SystemReport rep = check_4step_system(base.table(), seq41_cochain(7, Seq41Family::Two, bad));
    CHECK(!rep.pass());
}

TEST_CASE("seq41 families") {
    // Zero parameters give the 4-step base back.
    auto [g0, rep0] = seq41_family(7, Seq41Family::One, {}, kCfg);
    CHECK(g0.table() == catalog_build("g_1_0_0_k", 7).table());
    CHECK(rep0.pass());
    CHECK(rep0.sequence.parts == std::vector<std::size_t>{4, 1, 1, 1});

    Seq41Params p1;
    p1.a = 1;
    p1.ak[6] = 1;
    p1.c[{6, 7}] = 1;
    auto [g1, rep1] = seq41_family(9, Seq41Family::One, p1, kCfg);
    CHECK(rep1.jacobi_ok);
    CHECK(rep1.sequence.parts == std::vector<std::size_t>{4, 1, 1, 1, 1, 1});
    CHECK(rep1.breadth_value == 3);
    CHECK(rep1.pass());

    Seq41Params p2;
    p2.dk[6] = 1;
    p2.c[{7, 8}] = 1;
    auto residuals = seq41_constraint(9, p2);
    for (const auto& [j, r] : residuals) CHECK(r == 0);
    auto [g2, rep2] = seq41_family(9, Seq41Family::Two, p2, kCfg);
    CHECK(rep2.pass());

    Seq41Params viol;
    viol.dk[6] = 1;
    viol.c[{6, 7}] = 1;
    CHECK(seq41_constraint(9, viol).at(7) != 0);
    CHECK_THROWS_AS(seq41_family(9, Seq41Family::Two, viol, kCfg), constraint_error);

    // parameter shape validation
    Seq41Params wrong;
    wrong.dk[6] = 1;
    CHECK_THROWS_AS(seq41_cochain(9, Seq41Family::One, wrong), param_error);
    Seq41Params wrong2;
    wrong2.ak[6] = 1;
    CHECK_THROWS_AS(seq41_cochain(9, Seq41Family::Two, wrong2), param_error);
    Seq41Params oob;
    oob.bk[5] = 1;
    CHECK_THROWS_AS(seq41_cochain(9, Seq41Family::One, oob), param_error);
    CHECK_THROWS_AS(seq41_cochain(4, Seq41Family::One, {}), dimension_error);
}

TEST_CASE("g2 cocycles") {
    G2CocycleParams p;
    p.a3[{2, 4}] = 2;
    p.a5[{6, 7}] = -1;
    Cochain2 phi = g2_cocycle(7, G2Component::C1, p);
    CHECK(phi.basis_value(2, 4) == SparseVec{{3, Rational(2)}});
    CHECK(phi.basis_value(6, 7) == SparseVec{{5, Rational(-1)}});

    LieAlgebra g2 = catalog_build("g_2_k", 7);
    CHECK(is_Z2_CH(g2.table(), phi));
    CHECK(is_identically_zero(comp1(phi, phi)));
    CHECK(check_2step_system(g2.table(), phi).pass());

    G2CocycleParams bad;
    bad.a3[{3, 4}] = 1; // index 3 is excluded
    CHECK_THROWS_AS(g2_cocycle(7, G2Component::C1, bad), param_error);
    G2CocycleParams bad2;
    bad2.a3[{2, 7}] = 1; // j must stay below n for the second component
    CHECK_THROWS_AS(g2_cocycle(7, G2Component::C2, bad2), param_error);
    CHECK_THROWS_AS(g2_cocycle(4, G2Component::C1, {}), dimension_error);
}

TEST_CASE("g3 cocycles: fixed examples") {
    Cochain2 phi1 = g3_cocycle(9, G3Family::Phi1, {});
    CHECK(phi1.entries().size() == 2);
    CHECK(phi1.basis_value(2, 4) == SparseVec{{8, Rational(1)}});
    CHECK(phi1.basis_value(2, 6) == SparseVec{{9, Rational(1)}});

    CHECK(g3_cocycle(8, G3Family::Phi3, {}).entries().empty());

    CHECK_THROWS_AS(g3_cocycle(8, G3Family::Phi1, {}), dimension_error);
    CHECK_THROWS_AS(g3_cocycle(7, G3Family::Phi2, {}), dimension_error);

    G3CocycleParams badlow;
    badlow.low[{2, 6}] = {1, 0, 0}; // (2,6) is not free in the second family
    CHECK_THROWS_AS(g3_cocycle(9, G3Family::Phi2, badlow), param_error);

    G3CocycleParams badhigh;
    badhigh.high[{8, 9}] = 1; // the X8 slot is taken by the (2,4) target
    CHECK_THROWS_AS(g3_cocycle(9, G3Family::Phi2, badhigh), param_error);
}

TEST_CASE("a high pair touching the consumed X8 slot breaks comp1(phi,phi)") {
    // Hand-built variant of the second family shape with a coefficient on
    // (X8, X9): phi(phi(X2,X4), X9) = phi(X8, X9) != 0, so phi o1 phi != 0.
    // This is why the constructor keeps the free pairs above X8.
    Cochain2 phi(9);
    phi.add_term(2, 4, 8, 1);
    phi.add_term(8, 9, 5, 1);
    CHECK(!is_identically_zero(comp1(phi, phi)));
    CHECK(is_Z2_CH(catalog_build("g_3_k", 9).table(), phi));
}

TEST_CASE("g3 cocycle families satisfy the 2-step premises for random draws") {
    std::mt19937_64 rng(47);
    for (std::size_t n : {8, 9, 10}) {
        LieAlgebra base = catalog_build("g_3_k", n);
        for (G3Family family : {G3Family::Phi1, G3Family::Phi2, G3Family::Phi3}) {
            if (family == G3Family::Phi1 && n < 9) continue;
            for (int rep = 0; rep < 5; ++rep) {
                Cochain2 phi = g3_cocycle(n, family, random_g3_cocycle(rng, n, family));
                CHECK(is_Z2_CH(base.table(), phi));
                CHECK(is_identically_zero(comp1(phi, phi)));

                LieAlgebra deformed = linear_deform(base, phi, 1);
                CHECK(jacobi_check(deformed).empty());
                CHECK(nilpotency_class(deformed) == 2);
            }
        }
    }
}

TEST_CASE("deformed invariants per cocycle family") {
    // First and third family: every draw lands exactly on sequence
    // (2,2,2,1,...,1) with breadth 3.  The second family keeps that shape as
    // long as no high-pair coefficient is active (always true for n <= 9),
    // but a high pair combined with the fixed X8 target reaches breadth 4:
    // the parameterization contains points above the stated sequence, exactly
    // like the second component of the double-block families.
    std::mt19937_64 rng(61);
    SamplingConfig cfg;
    for (std::size_t n : {9, 10}) {
        LieAlgebra base = catalog_build("g_3_k", n);
        std::vector<std::size_t> claimed{2, 2, 2};
        claimed.insert(claimed.end(), n - 6, 1);
        for (G3Family family : {G3Family::Phi1, G3Family::Phi3}) {
            for (int rep = 0; rep < 8; ++rep) {
                Cochain2 phi = g3_cocycle(n, family, random_g3_cocycle(rng, n, family));
                LieAlgebra g = linear_deform(base, phi, 1);
                CHECK(characteristic_sequence(g, cfg).parts.parts == claimed);
                CHECK(breadth(g, cfg).breadth == 3);
            }
        }
        for (int rep = 0; rep < 8; ++rep) {
            Cochain2 phi = g3_cocycle(n, G3Family::Phi2, random_g3_cocycle(rng, n, G3Family::Phi2));
            LieAlgebra g = linear_deform(base, phi, 1);
            auto seq = characteristic_sequence(g, cfg).parts;
            std::size_t b = breadth(g, cfg).breadth;
            std::size_t twos = std::count(seq.parts.begin(), seq.parts.end(), 2);
            CHECK(nilpotency_class(g) == 2);
            CHECK(b == twos);
            CHECK((b == 3) == (seq.parts == claimed));
        }
    }

    // frozen witness of the breadth-4 point: a_{9,10} = 1 at n = 10
    G3CocycleParams p;
    p.high[{9, 10}] = 1;
    LieAlgebra g = linear_deform(catalog_build("g_3_k", 10),
                                 g3_cocycle(10, G3Family::Phi2, p), 1);
    CHECK(jacobi_check(g).empty());
    CHECK(breadth(g, cfg).breadth == 4);
    CHECK(characteristic_sequence(g, cfg).parts.parts ==
          std::vector<std::size_t>{2, 2, 2, 2, 1, 1});
}

TEST_CASE("seq41 draws always land on sequence (4,1,...,1) with breadth 3") {
    std::mt19937_64 rng(67);
    SamplingConfig cfg;
    for (std::size_t n : {7, 9}) {
        for (int rep = 0; rep < 6; ++rep) {
            Seq41Params p;
            p.a = testutil::rand_int(rng, -3, 3);
            for (BasisIndex k = 6; k <= n; ++k) {
                if (rng() % 2) p.ak[k] = testutil::rand_int(rng, -3, 3);
                if (rng() % 2) p.bk[k] = testutil::rand_int(rng, -3, 3);
            }
            for (BasisIndex i = 6; i <= n; ++i)
                for (BasisIndex j = i + 1; j <= n; ++j)
                    if (rng() % 2) p.c[{i, j}] = testutil::rand_int(rng, -3, 3);
            auto [g, rep8] = seq41_family(n, Seq41Family::One, p, cfg);
            CHECK(rep8.pass());
        }
        for (int rep = 0; rep < 6; ++rep) {
            Seq41Params p;
            BasisIndex dk = 6 + rng() % (n - 5);
            p.dk[dk] = 1 + rng() % 3;
            for (BasisIndex k = 6; k <= n; ++k)
                if (rng() % 2) p.bk[k] = testutil::rand_int(rng, -3, 3);
            for (BasisIndex i = 6; i <= n; ++i)
                for (BasisIndex j = i + 1; j <= n; ++j)
                    if (i != dk && j != dk && rng() % 2)
                        p.c[{i, j}] = testutil::rand_int(rng, -3, 3);
            auto [g, rep8] = seq41_family(n, Seq41Family::Two, p, cfg);
            CHECK(rep8.pass());
        }
    }
}

TEST_CASE("a second-family deformation in dimension 8") {
    G3CocycleParams p;
    p.low[{2, 4}] = {1, 0, 0};
    Cochain2 phi = g3_cocycle(8, G3Family::Phi2, p);
    LieAlgebra g = linear_deform(catalog_build("g_3_k", 8), phi, 1);
    CHECK(jacobi_check(g).empty());
    CHECK(characteristic_sequence(g, kCfg).parts.parts ==
          std::vector<std::size_t>{2, 2, 2, 1, 1});
    CHECK(breadth(g, kCfg).breadth == 3);
}

TEST_CASE("random g2-cocycle deformations are 2-step and obey the breadth formula") {
    // First-component values stay inside span{X3,X5}, so the breadth is
    // always 2.  Second-component draws may use the extra Xn direction and
    // reach breadth 3 with sequence (2,2,2,1,...,1); either way the sequence
    // formula pins the breadth.
    std::mt19937_64 rng(53);
    std::size_t seen_b3 = 0;
    for (std::size_t n : {6, 7, 8}) {
        LieAlgebra base = catalog_build("g_2_k", n);
        for (G2Component comp : {G2Component::C1, G2Component::C2}) {
            for (int rep = 0; rep < 5; ++rep) {
                Cochain2 phi = g2_cocycle(n, comp, random_g2_cocycle(rng, n, comp));
                CHECK(is_Z2_CH(base.table(), phi));
                CHECK(is_identically_zero(comp1(phi, phi)));
                LieAlgebra g = linear_deform(base, phi, 1);
                CHECK(jacobi_check(g).empty());
                CHECK(nilpotency_class(g) == 2);

                auto cert = breadth(g, kCfg);
                auto seq = characteristic_sequence(g, kCfg).parts;
                CHECK(cert.breadth == breadth_from_sequence(seq));
                if (comp == G2Component::C1) {
                    CHECK(classify_b2(g, kCfg) == BreadthTwoClass::TwoStep22);
                } else if (cert.breadth == 2) {
                    CHECK(classify_b2(g, kCfg) == BreadthTwoClass::TwoStep22);
                } else {
                    CHECK(cert.breadth == 3);
                    std::size_t twos = std::count(seq.parts.begin(), seq.parts.end(), 2);
                    CHECK(twos == 3); // 2-step: breadth equals the number of 2s
                    ++seen_b3;
                }
            }
        }
    }
    CHECK(seen_b3 > 0); // the second component does produce breadth-3 points
}

TEST_CASE("3-step shape checker") {
    // support outside the family
    CHECK(!matches_3step_shape(single(7, 3, 6, 4)).ok);
    // wrong target
    CHECK(!matches_3step_shape(single(7, 2, 3, 5)).ok);
    // coupling: a (5,i) value on X3 forces the matching (6,i) value on X4
    CHECK(!matches_3step_shape(single(7, 5, 7, 3)).ok);
    Cochain2 coupled(7);
    coupled.add_term(5, 7, 3, 1);
    coupled.add_term(6, 7, 4, 1);
    CHECK(matches_3step_shape(coupled).ok);
    CHECK(matches_3step_shape(Cochain2(6)).ok);
    CHECK(!matches_3step_shape(Cochain2(5)).ok);
}

TEST_CASE("3-step family: breadth 3 iff sequence (3,2,1,...,1)") {
    // Operational restatement over the catalog's 3-step instances.
    std::vector<std::pair<std::string, std::size_t>> keys{{"g_1_1_k", 6}, {"g_1_1_k", 8}};
    for (const auto& e : catalog_entries())
        if (e.key.rfind("n6_", 0) == 0 ||
            (e.key.rfind("n7_", 0) == 0 && e.key.rfind("n7_12", 0) != 0))
            keys.push_back({e.key, e.key.rfind("n6_", 0) == 0 ? 6 : 7});

    for (const auto& [key, n] : keys) {
        Params params = key == "n7_117" ? Params{{"alpha", Rational(-1)}} : Params{};
        LieAlgebra g = catalog_build(key, n, params);
        if (nilpotency_class(g) != 3) continue;
        auto seq = characteristic_sequence(g, kCfg).parts;
        bool is_321 = seq.parts.size() >= 2 && seq.parts[0] == 3 && seq.parts[1] == 2 &&
                      std::count(seq.parts.begin(), seq.parts.end(), 2) == 1;
        CHECK(is_321 == (breadth(g, kCfg).breadth == 3));
    }
}
