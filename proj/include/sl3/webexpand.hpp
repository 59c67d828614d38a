#pragma once

#include "sl3/surface.hpp"

#include <string>
#include <vector>

namespace sl3 {

// one corner of the loop: enter triangle through edge_in, leave through edge_out
struct LoopStep {
    int triangle = -1;
    int edge_in = -1, edge_out = -1;
    int side_in = -1, side_out = -1;
};

struct LoopDescriptor {
    std::vector<LoopStep> steps;
    std::string str(const Triangulation& t) const;
};

// "T1:E1:E2,T2:E2:E1"
LoopDescriptor parse_loop(const Triangulation& t, const std::string& text);
// fills in the side indices
void validate_loop(const Triangulation& t, LoopDescriptor& loop);
LoopDescriptor reversed_loop(const LoopDescriptor& loop);

// triangle pieces of Delta^split; strand s of a piece sits at elevation s+1
struct TrianglePiece {
    int triangle, side_in, side_out;
    int strands;
};
// biangle of the crossed edge; strand i on the exit side continues as perm[i]
struct BiangleBraid {
    int edge;
    std::vector<int> perm;
    std::vector<std::pair<int, int>> crossings;  // (over, under) by exit position
    bool identity() const;
};

struct WebOnSplit {
    LoopDescriptor loop;
    std::vector<TrianglePiece> pieces;
    std::vector<BiangleBraid> braids;  // braids[i] sits after pieces[i]
    int strands = 1;
    int components() const;
};

WebOnSplit loop_to_web(const Triangulation& t, const LoopDescriptor& loop);
WebOnSplit bangle(const WebOnSplit& w, int n);
// cyclic braid in biangle `at` (default: first one)
WebOnSplit bracelet(const WebOnSplit& w, int n, int at = 0);

struct ExpansionResult {
    std::vector<std::string> labels;
    ExpVec J;          // cutting monomial
    ExpVec J_total;    // with t^{s(T)} clearing powers
    TorusElement x;    // normalized element in the root torus
    TorusElement numerator;  // x * M^{J_total}
    bool positive = false, bar_invariant = false, grading_zero = false, homogeneous = false;
    IVec grading;
    std::string json() const;
};

class Expander {
public:
    explicit Expander(const DecoratedTriangulation& d);
    const DecoratedTriangulation& triangulation() const { return d_; }
    const QuantumSeed& seed() const { return seed_; }
    // single strand, double cut on every crossed edge
    TorusElement expand_loop(const LoopDescriptor& loop) const;
    ExpansionResult expand(const WebOnSplit& w) const;
    ExpansionResult finish(const TorusElement& x, const ExpVec& J) const;
    // t^{+} / t^{-} of triangle t
    const TorusElement& triad(int t, int sign) const;

private:
    TorusElement arc(int t, int side, int terminal_corner) const;
    TorusElement edge_arc(int e, int end) const;
    DecoratedTriangulation d_;
    IndexSet idx_;
    QuantumSeed seed_;
    IMat end_map_;
    std::vector<TorusElement> t_plus_, t_minus_;
};

ExpansionResult expand(const WebOnSplit& w, const DecoratedTriangulation& d);

// closed loop pushed through a bracelet: coefficients for gamma^a (gamma*)^b
struct BraceletTerm {
    int a, b;
    QLaurent c;
};
std::vector<BraceletTerm> bracelet_formula(int n);

struct OracleReport {
    bool pass = false;
    std::string name, detail;
};
OracleReport oracle_bangle_power(const DecoratedTriangulation& d, const LoopDescriptor& loop, int n);
// re-traces the loop in the flipped triangulation, transports through the 4-mutation word
OracleReport oracle_flip_transport(const DecoratedTriangulation& d, const LoopDescriptor& loop, int edge,
                                   int bracelet_n = 1);

// dual cycle in t2 with the same crossing signs on the edges common to t and t2
LoopDescriptor retrace_loop(const Triangulation& t, const LoopDescriptor& loop, const Triangulation& t2);

} // namespace sl3
