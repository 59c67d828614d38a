#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl3/io.hpp"
#include "sl3/skein.hpp"

using namespace sl3;

TEST_CASE("mutate_matrix of zero") {
    ExchangeMatrix B{IMat::Zero(3, 3), {false, false, true}};
    CHECK(mutate_matrix(B, 0) == B);
}

TEST_CASE("mutation is an involution on B and Pi") {
    QuantumSeed s = surface_seed(builtin_triangulation("quadrilateral"));
    for (int k = 0; k < s.n(); ++k) {
        if (s.frozen()[k]) continue;
        CompatiblePair p = mutate_pair(mutate_pair(s.pair, k), k);
        CHECK(p == s.pair);
        CHECK(mutate_pair(s.pair, k, +1) == mutate_pair(s.pair, k, -1));
    }
}

TEST_CASE("compatibility diagonal") {
    for (std::string n : {"triangle", "quadrilateral", "pentagon", "annulus11"}) {
        CompatibilityReport r = verify_compatibility(surface_seed(builtin_triangulation(n)).pair);
        CHECK(r.ok);
        for (auto d : r.diagonal) CHECK(d == 6);
    }
    ExchangeMatrix B{IMat::Zero(2, 2), {false, false}};
    B.b2(0, 1) = 2;
    B.b2(1, 0) = -2;
    CompatibilityReport bad = verify_compatibility({B, IMat::Zero(2, 2)});
    CHECK(!bad.ok);
    CHECK(!bad.violations.empty());
}

TEST_CASE("mutated seeds stay compatible with diagonal 6") {
    QuantumSeed s = surface_seed(builtin_triangulation("pentagon"));
    s = mutate_word(s, {10, 12, 10, 16, 14});
    CompatibilityReport r = verify_compatibility(s.pair);
    CHECK(r.ok);
    for (auto d : r.diagonal) CHECK(d == 6);
}

TEST_CASE("enumerate triangle") {
    Enumeration e = enumerate(surface_seed(builtin_triangulation("triangle")), 100);
    CHECK(e.clusters.size() == 2);
    CHECK(e.variables.size() == 8);
    int frozen = 0;
    for (bool f : e.variable_frozen) frozen += f;
    CHECK(frozen == 6);
}

TEST_CASE("enumerate quadrilateral") {
    DecoratedTriangulation d = builtin_triangulation("quadrilateral");
    d.sign = {+1, -1};
    Enumeration e = enumerate(surface_seed(d), 1000);
    CHECK(e.clusters.size() == 50);
    CHECK(e.variables.size() == 24);
    int frozen = 0;
    for (bool f : e.variable_frozen) frozen += f;
    CHECK(frozen == 8);
    for (auto& x : e.variables) {
        CHECK(x.is_positive());
        CHECK(x.is_bar_invariant());
    }
    CHECK_THROWS_AS(enumerate(surface_seed(d), 10), BoundExceeded);
}

TEST_CASE("all four quadrilateral sign patterns give the same exchange graph size") {
    for (int a : {1, -1})
        for (int b : {1, -1}) {
            DecoratedTriangulation d = builtin_triangulation("quadrilateral");
            d.sign = {a, b};
            Enumeration e = enumerate(surface_seed(d), 1000);
            CHECK(e.clusters.size() == 50);
            CHECK(e.variables.size() == 24);
        }
}

TEST_CASE("pentagon exchange graph has the size of type E7") {
    // E7: 4160 clusters, 63 positive roots + 7 initial = 70 cluster variables; 10 frozen
    Enumeration e = enumerate(surface_seed(builtin_triangulation("pentagon")), 5000);
    CHECK(e.clusters.size() == 4160);
    int frozen = 0;
    for (bool f : e.variable_frozen) frozen += f;
    CHECK(frozen == 10);
    CHECK(e.variables.size() == 80);
}

TEST_CASE("quadrilateral exchange graph has the size of type D4") {
    // D4: 50 clusters, 12 positive roots + 4 = 16
    Enumeration e = enumerate(surface_seed(builtin_triangulation("quadrilateral")), 1000);
    CHECK(e.clusters.size() == 50);
    CHECK(e.variables.size() - 8 == 16);
}

TEST_CASE("seed without unfrozen indices") {
    ExchangeMatrix B{IMat::Zero(2, 2), {true, true}};
    IMat pi(2, 2);
    pi << 0, 1, -1, 0;
    Enumeration e = enumerate(initial_seed({"a", "b"}, B, pi), 10);
    CHECK(e.clusters.size() == 1);
    CHECK(e.variables.size() == 2);
}

TEST_CASE("ensemble projection of zero B") {
    ExchangeMatrix B{IMat::Zero(3, 3), {false, false, false}};
    EnsembleProjection p = ensemble_projection(B);
    CHECK(p.m == 3);
    CHECK(p.proj.cwiseAbs() == IMat::Identity(3, 3));
}

TEST_CASE("quadrilateral first mutation") {
    DecoratedTriangulation d = builtin_triangulation("quadrilateral");
    d.sign = {+1, -1};
    QuantumSeed s = surface_seed(d);
    REQUIRE(s.labels[8] == "e31");
    REQUIRE(s.labels[11] == "t134-");
    REQUIRE(s.labels[10] == "t123+");
    REQUIRE(s.labels[9] == "e13");
    REQUIRE(s.labels[5] == "e34");
    REQUIRE(s.labels[0] == "e21");
    const auto& A = s.frame;
    // A1^{-1} (q [A2 A3] + q^{-2} [A4 A7 A12])
    TorusElement rhs = A[8].inverse() * (weyl_order({A[11], A[10]}).shifted(2) +
                                         weyl_order({A[9], A[5], A[0]}).shifted(-4));
    CHECK(mutate_seed(s, 8).frame[8] == rhs);
}

TEST_CASE("frame q-commutes as Pi says in every quadrilateral cluster") {
    Enumeration e = enumerate(surface_seed(builtin_triangulation("quadrilateral")), 1000);
    for (auto& c : e.clusters) CHECK(check_frame_commutation(c.seed));
}

TEST_CASE("bar_check") {
    QuantumSeed s = surface_seed(builtin_triangulation("triangle"));
    CHECK(bar_check(s).ok);
    CHECK(bar_check(mutate_seed(s, s.n() - 1)).ok);
}

TEST_CASE("cluster key ignores order") {
    QuantumSeed s = surface_seed(builtin_triangulation("quadrilateral"));
    std::vector<int> perm(s.n());
    for (int i = 0; i < s.n(); ++i) perm[i] = (i + 5) % s.n();
    CHECK(cluster_key(permute_seed(s, perm)) == cluster_key(s));
}

TEST_CASE("seed file round trip") {
    QuantumSeed s = mutate_word(surface_seed(builtin_triangulation("quadrilateral")), {8, 10});
    QuantumSeed t = parse_seed(seed_json(s));
    CHECK(t.labels == s.labels);
    CHECK(t.pair == s.pair);
    REQUIRE(t.frame.size() == s.frame.size());
    for (size_t i = 0; i < s.frame.size(); ++i) CHECK(t.frame[i].terms() == s.frame[i].terms());
    CHECK(seed_json(t) == seed_json(s));
    CHECK_THROWS_AS(parse_seed("{\"version\": 1}"), InputError);
    CHECK_THROWS_AS(parse_seed("not json"), InputError);
}
