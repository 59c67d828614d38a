#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl3/skein.hpp"

#include <numeric>

using namespace sl3;

namespace {
IVec total(const IVec& g) {
    IVec t = IVec::Zero(2);
    for (int i = 0; i < g.size(); i += 2) {
        t[0] += g[i];
        t[1] += g[i + 1];
    }
    return t;
}
IVec v2(long long a, long long b) { return (IVec(2) << a, b).finished(); }
}

TEST_CASE("index set sizes") {
    // -3 chi + 2|M| unfrozen-and-frozen count per surface
    IndexSet a = build_index_set(builtin_triangulation("annulus11"));
    CHECK(a.n_edges == 4);
    CHECK(a.size() == 10);
    CHECK(std::count(a.frozen.begin(), a.frozen.end(), true) == 4);
    IndexSet t = build_index_set(builtin_triangulation("triangle"));
    CHECK(t.size() == 7);
    CHECK(std::count(t.frozen.begin(), t.frozen.end(), true) == 6);
    IndexSet p = build_index_set(builtin_triangulation("pentagon"));
    CHECK(p.size() == 17);
}

TEST_CASE("quiver sizes and signs") {
    DecoratedTriangulation d = builtin_triangulation("quadrilateral");
    d.sign = {+1, +1};
    ExchangeMatrix pp = build_quiver(d);
    CHECK(pp.n() == 12);
    d.sign = {+1, -1};
    ExchangeMatrix pm = build_quiver(d);
    IndexSet I = build_index_set(d);
    // (+,-) is the face mutation of (+,+) at the second triangle
    CHECK(mutate_matrix(pp, I.face_vertex(1)) == pm);
    CHECK(build_quiver(builtin_triangulation("triangle")).n() == 7);
}

TEST_CASE("web cluster of the triangle") {
    DecoratedTriangulation d = builtin_triangulation("triangle");
    auto w = web_cluster(d);
    int arcs = 0, triads = 0;
    for (auto& x : w) (x.kind == ElementaryWeb::Arc ? arcs : triads)++;
    CHECK(arcs == 6);
    CHECK(triads == 1);
    CHECK(w.back().sign == +1);
    d.sign[0] = -1;
    CHECK(web_cluster(d).back().sign == -1);
}

TEST_CASE("endpoint gradings") {
    DecoratedTriangulation d = builtin_triangulation("triangle");
    const int np = 3;
    for (auto& x : web_cluster(d)) {
        IVec g = total(endpoint_grading(x.germs, np));
        if (x.kind == ElementaryWeb::Triad) CHECK(g == v2(3, 0));
        else CHECK(g == v2(1, 1));
    }
    d.sign[0] = -1;
    CHECK(total(endpoint_grading(web_cluster(d).back().germs, np)) == v2(0, 3));
}

TEST_CASE("h webs have total grading (2,2)") {
    WebDictionary dict = build_dictionary("quadrilateral");
    for (std::string h : {"h1", "h2", "h3", "h4"}) CHECK(total(dict.grading.at(h)) == v2(2, 2));
}

TEST_CASE("Pi is skew") {
    for (std::string n : {"triangle", "quadrilateral", "pentagon", "annulus11"}) {
        IMat pi = commutation_matrix(builtin_triangulation(n));
        CHECK(pi == -pi.transpose());
    }
}

TEST_CASE("flip quadrilateral diagonal") {
    DecoratedTriangulation d = builtin_triangulation("quadrilateral");
    d.sign = {+1, +1};
    FlipResult f = flip(d, d.tri.edge_index("E13"));
    CHECK(f.word.size() == 4);
    CHECK(f.b_match);
    CHECK(f.pi_match);
    // the flipped triangulation has the other diagonal
    bool has24 = false;
    for (auto& e : f.flipped.tri.edges)
        if (!e.boundary) {
            std::set<std::string> ends = {f.flipped.tri.points[e.ends[0]], f.flipped.tri.points[e.ends[1]]};
            has24 = ends == std::set<std::string>{"2", "4"};
        }
    CHECK(has24);
}

TEST_CASE("flip annulus and round trips") {
    DecoratedTriangulation d = builtin_triangulation("annulus11");
    for (std::string e : {"E1", "E2"}) {
        FlipResult f = flip(d, d.tri.edge_index(e));
        CHECK(f.b_match);
        CHECK(f.pi_match);
        FlipRoundTrip r = flip_round_trip(d, d.tri.edge_index(e));
        CHECK(r.triangulation_equal);
        CHECK(r.seed_equal);
    }
}

TEST_CASE("flip errors") {
    DecoratedTriangulation d = builtin_triangulation("quadrilateral");
    d.sign = {+1, +1};
    CHECK_THROWS_AS(flip(d, d.tri.edge_index("E12")), InputError);
    d.sign = {+1, -1};
    CHECK_THROWS_AS(flip(d, d.tri.edge_index("E13")), InputError);
}

TEST_CASE("sign change is one mutation") {
    DecoratedTriangulation d = builtin_triangulation("triangle");
    SignChange s = change_sign(d, 0);
    CHECK(s.b_match);
    CHECK(s.pi_match);
    CHECK(s.changed.sign[0] == -1);
}

TEST_CASE("L(3) check") {
    for (std::string n : {"triangle", "quadrilateral", "pentagon", "annulus11"}) {
        DecoratedTriangulation d = builtin_triangulation(n);
        L3Report r = l3_check(d);
        CHECK(r.ok());
        CHECK(r.free_rank == 2 * int(d.tri.points.size()));
    }
}

TEST_CASE("triangulation parse errors") {
    CHECK_THROWS_AS(parse_triangulation("{"), InputError);
    CHECK_THROWS_AS(parse_triangulation("{}"), InputError);
    CHECK_THROWS_AS(load_triangulation("/nonexistent/x.json"), InputError);
    CHECK_THROWS_AS(parse_signs("+,x", 2), InputError);
    CHECK_THROWS_AS(parse_signs("+", 2), InputError);
    CHECK_THROWS_AS(builtin_triangulation("torus"), InputError);
    // a triangle whose side does not join its corners
    CHECK_THROWS_AS(parse_triangulation(R"({"marked_points": ["1","2","3"],
      "boundary_components": [["1","2","3"]],
      "edges": [{"name":"E12","ends":["1","2"],"kind":"boundary"},
                {"name":"E23","ends":["2","3"],"kind":"boundary"},
                {"name":"E13","ends":["1","3"],"kind":"boundary"}],
      "triangles": [{"name":"T","corners":["1","2","3"],"sides":["E23","E12","~E13"]}]})"),
                    InputError);
}

TEST_CASE("data files match built-ins") {
    for (std::string n : {"triangle", "quadrilateral", "pentagon", "annulus11"}) {
        DecoratedTriangulation a = load_triangulation(std::string(SL3_DATA) + "/" + n + ".json");
        DecoratedTriangulation b = builtin_triangulation(n);
        CHECK(build_quiver(a) == build_quiver(b));
        CHECK(commutation_matrix(a) == commutation_matrix(b));
    }
}
