// one PASS/FAIL line per acceptance criterion; exit status 1 if any fails

#include "properties.hpp"
#include "sl3/suites.hpp"
#include "sl3/webexpand.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>

using namespace sl3;

namespace {

int failed = 0;

void report(int n, bool pass, const std::string& what, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " " << n << " " << what;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    failed += !pass;
}

std::string failing(const SuiteResult& r) {
    std::string s;
    for (auto& c : r.checks)
        if (!c.pass) s += (s.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
    return s;
}

void c1() {
    std::vector<std::pair<std::string, std::vector<int>>> cases = {
        {"triangle", {}}, {"quadrilateral", {1, 1}}, {"quadrilateral", {1, -1}}, {"quadrilateral", {-1, 1}},
        {"quadrilateral", {-1, -1}}, {"pentagon", {}}, {"annulus11", {}}};
    bool ok = true;
    std::string bad;
    for (auto& [n, s] : cases) {
        DecoratedTriangulation d = builtin_triangulation(n);
        if (!s.empty()) d.sign = s;
        CompatibilityReport r = verify_compatibility(surface_seed(d).pair);
        bool six = r.ok;
        for (auto x : r.diagonal) six = six && x == 6;
        if (!six) bad += n + " ";
        ok = ok && six;
    }
    report(1, ok, "compatibility (6 Id, 0) on 7 decorated triangulations", bad);
}

void c2() {
    SuiteResult r = run_suite("triangle");
    report(2, r.ok(), "triangle: 2 clusters, 8 variables, t+t- exchange, full table", failing(r));
}

void c3() {
    DecoratedTriangulation d = builtin_triangulation("quadrilateral");
    d.sign = {+1, -1};
    QuantumSeed s = surface_seed(d);
    Enumeration e = enumerate(s, 1000);
    int frozen = 0;
    bool pos = true, bar = true;
    for (size_t i = 0; i < e.variables.size(); ++i) {
        frozen += e.variable_frozen[i];
        pos = pos && e.variables[i].is_positive();
        bar = bar && e.variables[i].is_bar_invariant();
    }
    const auto& A = s.frame;
    TorusElement want = A[8].inverse() * (weyl_order({A[11], A[10]}).shifted(2) + weyl_order({A[9], A[5], A[0]}).shifted(-4));
    bool first = mutate_seed(s, 8).frame[8] == want;
    std::ostringstream o;
    o << e.clusters.size() << " clusters, " << e.variables.size() << " variables (" << e.variables.size() - frozen
      << " unfrozen, " << frozen << " frozen), positive " << pos << ", bar " << bar << ", A'1 " << first;
    report(3, e.clusters.size() == 50 && e.variables.size() == 24 && frozen == 8 && pos && bar && first,
           "quadrilateral (+,-) exchange graph", o.str());
}

void c4() {
    SuiteResult r = run_suite("quadrilateral");
    std::string d = failing(r);
    if (!r.discrepancies.empty()) d += "; rows differing from the printed table:";
    for (auto& x : r.discrepancies) d += "\n       " + x.substr(0, x.find(" lhs"));
    report(4, r.ok(), "quadrilateral relation table", d);
}

void c5() {
    SuiteResult r = run_suite("flip");
    report(5, r.ok(), "flip words and round trips (quadrilateral, annulus, pentagon)", failing(r));
}

void c6() {
    SuiteResult r = run_suite("grading");
    report(6, r.ok(), "grading: coker rank 2|M|, endpoint = transported, homogeneous exchanges", failing(r));
}

void c7() {
    DecoratedTriangulation d = builtin_triangulation("annulus11");
    LoopDescriptor loop = parse_loop(d.tri, "T1:E1:E2,T2:E2:E1");
    validate_loop(d.tri, loop);
    Expander ex(d);
    WebOnSplit w = loop_to_web(d.tri, loop);
    bool ok = true;
    std::string detail;
    auto one = [&](const std::string& name, const WebOnSplit& web) {
        ExpansionResult r = ex.expand(web);
        bool good = r.positive && r.grading_zero && r.bar_invariant;
        if (!good)
            detail += (detail.empty() ? "" : "; ") + name + ": positive " + (r.positive ? "yes" : "no") + ", bar " +
                      (r.bar_invariant ? "yes" : "no") + ", grading zero " + (r.grading_zero ? "yes" : "no");
        ok = ok && good;
    };
    one("loop", w);
    for (int n = 1; n <= 3; ++n) {
        one("bangle " + std::to_string(n), bangle(w, n));
        one("bracelet " + std::to_string(n), bracelet(w, n));
    }
    report(7, ok, "annulus loop, bangles, bracelets n=1..3", detail);
}

void c8() {
    SuiteResult r = run_suite("bangle-oracle");
    report(8, r.ok(), "bangle power n=2,3; flip transport of loop and bracelet 2", failing(r));
}

void c9() {
    constexpr int n = 1000;
    std::vector<std::pair<std::string, props::Outcome>> runs = {
        {"mutation involution", props::mutation_involution(n)},
        {"q-commutation", props::q_commutation(n)},
        {"exact_left_divide", props::divide_round_trip(n)},
        {"bar involution", props::bar_involution(n)},
        {"enumeration 1 vs N threads", props::enumeration_threads(n)}};
    bool ok = true;
    std::string d;
    for (auto& [name, o] : runs) {
        d += (d.empty() ? "" : ", ") + name + " " + std::to_string(o.cases - o.failures) + "/" + std::to_string(o.cases);
        ok = ok && o.ok(n);
    }
    report(9, ok, "property suites", d);
}

} // namespace

int main() {
    c1();
    c2();
    c3();
    c4();
    c5();
    c6();
    c7();
    c8();
    c9();
    std::cout << (9 - failed) << "/9 criteria pass" << std::endl;
    return failed ? 1 : 0;
}
