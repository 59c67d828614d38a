#pragma once

#include "sl3/cluster.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl3 {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Edge {
    std::string name;
    std::array<int, 2> ends{};  // marked point indices
    bool boundary = false;
};

// side i runs corners[i] -> corners[(i+1)%3]
struct Triangle {
    std::string name;
    std::array<int, 3> corners{};
    std::array<int, 3> side{};
    std::array<bool, 3> reversed{};
    // edge end sitting at corner c_i on side i / side i-1
    int first_end(int i) const { return reversed[i] ? 1 : 0; }
    int last_end(int i) const { return reversed[(i + 2) % 3] ? 0 : 1; }
};

struct Triangulation {
    std::vector<std::string> points;
    std::vector<std::vector<int>> boundary_components;
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;
    int point_index(const std::string& p) const;
    int edge_index(const std::string& e) const;
    int triangle_index(const std::string& t) const;
    void validate() const;
};

struct DecoratedTriangulation {
    Triangulation tri;
    std::vector<int> sign;  // +1 / -1 per triangle
};

DecoratedTriangulation parse_triangulation(const std::string& text);
DecoratedTriangulation load_triangulation(const std::string& path);
// "+,-" in triangle order
std::vector<int> parse_signs(const std::string& s, int count);
std::string triangulation_json(const DecoratedTriangulation& d);

// edge vertex (e, x) = 2e + x: arc along e ending at end x; face vertex = 2|E| + t
struct IndexSet {
    int n_edges = 0, n_triangles = 0;
    int size() const { return 2 * n_edges + n_triangles; }
    int edge_vertex(int e, int end) const { return 2 * e + end; }
    int face_vertex(int t) const { return 2 * n_edges + t; }
    bool is_face(int i) const { return i >= 2 * n_edges; }
    int op(int i) const { return is_face(i) ? i : (i ^ 1); }
    std::vector<bool> frozen;
    std::vector<std::string> labels;
};

IndexSet build_index_set(const DecoratedTriangulation& d);
ExchangeMatrix build_quiver(const DecoratedTriangulation& d);
// local 7x7 triangle quivers, vertex order F0,S0,F1,S1,F2,S2,k
IMat triangle_quiver(int sign);

struct Germ {
    int point;
    int slot;
    bool in;  // oriented toward the marked point
};

struct ElementaryWeb {
    enum Kind { Arc, Triad } kind = Arc;
    int edge = -1, end = -1;     // arc: terminal end
    int triangle = -1, sign = 0; // triad: +1 sink, -1 source
    std::vector<Germ> germs;
    std::string label;
};

// angular slot of an edge-end / corner at its marked point
struct Fans {
    std::map<std::pair<int, int>, std::pair<int, int>> edge_end;  // (e,end) -> (point, slot)
    std::map<std::pair<int, int>, std::pair<int, int>> corner;    // (t,i) -> (point, slot)
};
Fans build_fans(const Triangulation& t);

std::vector<ElementaryWeb> web_cluster(const DecoratedTriangulation& d);
long long germ_pairing(const std::vector<Germ>& a, const std::vector<Germ>& b);
IMat commutation_matrix(const DecoratedTriangulation& d);

QuantumSeed surface_seed(const DecoratedTriangulation& d);

// per point (away, toward)
IVec endpoint_grading(const std::vector<Germ>& germs, int n_points);
// rows: grading of each cluster web
IMat grading_matrix(const DecoratedTriangulation& d);

struct FlipResult {
    DecoratedTriangulation flipped;
    std::vector<int> word;   // mutation indices in the original seed
    std::vector<int> perm;   // perm[i] = index in flipped of original index i
    bool b_match = false, pi_match = false;
};
FlipResult flip(const DecoratedTriangulation& d, int edge);
// the flipped triangulation only
DecoratedTriangulation flip_triangulation(const DecoratedTriangulation& d, int edge, int* t_first = nullptr,
                                          int* t_second = nullptr);

// flip E, then flip the new edge back; compares seeds after both 4-mutation words
struct FlipRoundTrip {
    bool forward = false, backward = false;
    bool triangulation_equal = false;  // quiver and Pi of the twice-flipped triangulation
    bool seed_equal = false;           // B, Pi and frame back to the original
};
FlipRoundTrip flip_round_trip(const DecoratedTriangulation& d, int edge);

struct SignChange {
    DecoratedTriangulation changed;
    int index;
    bool b_match = false, pi_match = false;
};
SignChange change_sign(const DecoratedTriangulation& d, int t);

struct L3Report {
    bool in_l3 = true, kills_image = true, rank_ok = true, generates = true;
    int free_rank = 0, expected = 0;
    std::vector<long long> torsion;
    bool ok() const { return in_l3 && kills_image && rank_ok && generates; }
};
L3Report l3_check(const DecoratedTriangulation& d);

IMat relabel(const IMat& m, const std::vector<int>& perm);

} // namespace sl3
