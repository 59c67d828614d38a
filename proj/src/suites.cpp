#include "sl3/suites.hpp"

#include "sl3/skein.hpp"

#include <set>
#include <sstream>

namespace sl3 {

namespace {

std::string yn(bool b) { return b ? "yes" : "no"; }

void add(SuiteResult& r, const std::string& name, bool pass, const std::string& detail = "") {
    r.checks.push_back({name, pass, detail});
}

SuiteResult triangle_suite() {
    SuiteResult r;
    r.suite = "triangle";
    QuantumSeed s = surface_seed(builtin_triangulation("triangle"));
    Enumeration e = enumerate(s, 100);
    add(r, "clusters", e.clusters.size() == 2, std::to_string(e.clusters.size()));
    add(r, "variables", e.variables.size() == 8, std::to_string(e.variables.size()));
    for (auto& c : verify_table("triangle")) {
        add(r, "row " + c.row.name, c.pass, row_text(c.row));
        if (!c.pass) r.discrepancies.push_back(c.text() + " lhs " + c.lhs + " rhs " + c.rhs);
    }
    LaurentDemo ld = triangle_laurent_demo({"t-", "t-"}, +1);
    add(r, "(t-)^2 cleared by (t+)^k", ld.positive && ld.k == 2, "k=" + std::to_string(ld.k));
    return r;
}

SuiteResult quadrilateral_suite() {
    SuiteResult r;
    r.suite = "quadrilateral";
    DecoratedTriangulation d = builtin_triangulation("quadrilateral");
    QuantumSeed s = surface_seed(d);
    Enumeration e = enumerate(s, 1000);
    int frozen = 0;
    bool pos = true, bar = true;
    for (size_t i = 0; i < e.variables.size(); ++i) {
        frozen += e.variable_frozen[i];
        pos = pos && e.variables[i].is_positive();
        bar = bar && e.variables[i].is_bar_invariant();
    }
    add(r, "clusters", e.clusters.size() == 50, std::to_string(e.clusters.size()));
    add(r, "variables", e.variables.size() == 24 && frozen == 8,
        std::to_string(e.variables.size()) + " (" + std::to_string(frozen) + " frozen)");
    add(r, "positive", pos);
    add(r, "bar-invariant", bar);
    int other_bad = 0;
    for (auto& c : verify_table("quadrilateral")) {
        if (c.row.kind == "other") {
            if (!c.pass) {
                ++other_bad;
                r.discrepancies.push_back(c.text() + " lhs " + c.lhs + " rhs " + c.rhs);
            }
            continue;
        }
        add(r, "row " + c.row.name + " (" + c.row.kind + ")", c.pass, row_text(c.row));
        if (!c.pass) r.discrepancies.push_back(c.text() + " lhs " + c.lhs + " rhs " + c.rhs);
    }
    add(r, "remaining discrepancies <= 2", other_bad <= 2, std::to_string(other_bad) + " rows");
    return r;
}

struct NamedSurface {
    std::string name;
    DecoratedTriangulation d;
    int depth;
};

std::vector<NamedSurface> grading_surfaces() {
    // depth -1: whole exchange graph
    return {{"triangle", builtin_triangulation("triangle"), -1},
            {"quadrilateral", builtin_triangulation("quadrilateral"), -1},
            {"pentagon", builtin_triangulation("pentagon"), 3},
            {"annulus11", builtin_triangulation("annulus11"), 4}};
}

SuiteResult grading_suite() {
    SuiteResult r;
    r.suite = "grading";
    for (auto& s : grading_surfaces()) {
        L3Report l3 = l3_check(s.d);
        const int np = int(s.d.tri.points.size());
        add(r, s.name + " coker rank", l3.free_rank == 2 * np,
            std::to_string(l3.free_rank) + " vs 2|M| = " + std::to_string(2 * np));
        add(r, s.name + " gradings span L(3)", l3.in_l3 && l3.kills_image && l3.generates);
        GradingTransport gt = grading_transport(s.d);
        add(r, s.name + " endpoint = transported ensemble grading (cluster webs)", gt.exists);
        if (s.name == "triangle" || s.name == "quadrilateral") {
            WebDictionary dict = build_dictionary(s.name, s.d);
            bool all = gt.exists;
            std::string bad;
            for (auto& [name, x] : dict.entries) {
                Grade g = grade(x, gt.proj);
                IVec t = gt.L * g.value;
                IVec want;
                for (auto& c : polygon_catalog(s.name))
                    if (c.name == name) want = c.grading;
                if (!g.homogeneous || t != want) {
                    all = false;
                    bad += name + " ";
                }
            }
            add(r, s.name + " endpoint = transported ensemble grading (dictionary)", all,
                std::to_string(dict.entries.size()) + " webs" + (bad.empty() ? "" : "; bad: " + bad));
        }
        std::string where;
        bool hom = exchange_homogeneous(surface_seed(s.d), gt.proj, s.depth, &where);
        add(r, s.name + " exchange terms homogeneous (" +
                   (s.depth < 0 ? std::string("all clusters") : "depth " + std::to_string(s.depth)) + ")",
            hom, where);
    }
    return r;
}

SuiteResult flip_suite() {
    SuiteResult r;
    r.suite = "flip";
    std::vector<std::pair<std::string, std::string>> cases = {
        {"quadrilateral", "E13"}, {"annulus11", "E1"}, {"annulus11", "E2"}, {"pentagon", "E13"}, {"pentagon", "E14"}};
    for (auto& [n, e] : cases) {
        DecoratedTriangulation d = builtin_triangulation(n);
        d.sign.assign(d.sign.size(), +1);
        const int ei = d.tri.edge_index(e);
        FlipResult f = flip(d, ei);
        std::string w;
        for (size_t k = 0; k < f.word.size(); ++k) w += (k ? "," : "") + std::to_string(f.word[k]);
        add(r, n + " " + e + " B", f.b_match, "word " + w);
        add(r, n + " " + e + " Pi", f.pi_match);
        FlipRoundTrip rt = flip_round_trip(d, ei);
        add(r, n + " " + e + " round trip", rt.forward && rt.backward && rt.triangulation_equal && rt.seed_equal,
            "triangulation " + yn(rt.triangulation_equal) + ", seed " + yn(rt.seed_equal));
    }
    for (std::string n : {"triangle", "quadrilateral", "pentagon", "annulus11"}) {
        DecoratedTriangulation d = builtin_triangulation(n);
        for (size_t t = 0; t < d.tri.triangles.size(); ++t) {
            SignChange sc = change_sign(d, int(t));
            add(r, n + " sign change at " + d.tri.triangles[t].name, sc.b_match && sc.pi_match);
        }
    }
    return r;
}

SuiteResult bangle_suite() {
    SuiteResult r;
    r.suite = "bangle-oracle";
    DecoratedTriangulation d = builtin_triangulation("annulus11");
    LoopDescriptor loop = parse_loop(d.tri, "T1:E1:E2,T2:E2:E1");
    for (int n : {2, 3}) {
        OracleReport o = oracle_bangle_power(d, loop, n);
        add(r, o.name, o.pass, o.detail);
    }
    for (int b : {1, 2}) {
        OracleReport o = oracle_flip_transport(d, loop, d.tri.edge_index("E1"), b);
        add(r, o.name, o.pass, o.detail);
    }
    return r;
}

} // namespace

bool SuiteResult::ok() const {
    for (auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<std::string> suite_names() { return {"triangle", "quadrilateral", "grading", "flip", "bangle-oracle"}; }

SuiteResult run_suite(const std::string& name) {
    if (name == "triangle") return triangle_suite();
    if (name == "quadrilateral") return quadrilateral_suite();
    if (name == "grading") return grading_suite();
    if (name == "flip") return flip_suite();
    if (name == "bangle-oracle") return bangle_suite();
    throw InputError("unknown suite '" + name + "'");
}

IVec GradingTransport::transported(const ExpVec& a) const {
    IVec v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = a[i];
    return L * (proj * v);
}

GradingTransport grading_transport(const DecoratedTriangulation& d) {
    GradingTransport t;
    ExchangeMatrix B = build_quiver(d);
    Cokernel c = cokernel(ensemble_map(B));
    t.proj = c.free_proj;
    t.end_map = grading_matrix(d);
    const IMat Gt = t.end_map.transpose();
    // integer right inverse of proj through least squares, then exact check
    Eigen::MatrixXd P = t.proj.cast<double>();
    Eigen::MatrixXd R = P.transpose() * (P * P.transpose()).inverse();
    Eigen::MatrixXd Ld = Gt.cast<double>() * R;
    t.L = Ld.array().round().cast<long long>().matrix();
    t.exists = (t.L * t.proj) == Gt;
    return t;
}

bool exchange_homogeneous(const QuantumSeed& root, const IMat& proj, int depth, std::string* where) {
    std::vector<std::pair<QuantumSeed, std::vector<int>>> level = {{root, {}}};
    std::set<std::string> seen = {cluster_key(root)};
    for (int dd = 0; !level.empty() && (depth < 0 || dd <= depth); ++dd) {
        std::vector<std::pair<QuantumSeed, std::vector<int>>> next;
        for (auto& [s, w] : level)
            for (int k = 0; k < s.n(); ++k) {
                if (s.frozen()[k]) continue;
                auto [a, b] = exchange_terms(s, k);
                Grade ga = grade(a, proj), gb = grade(b, proj);
                if (!ga.homogeneous || !gb.homogeneous || ga.value != gb.value) {
                    if (where) {
                        *where = "word";
                        for (int x : w) *where += " " + std::to_string(x);
                        *where += " k=" + std::to_string(k);
                    }
                    return false;
                }
                if (depth < 0 || dd < depth) {
                    QuantumSeed m = mutate_seed(s, k);
                    if (seen.insert(cluster_key(m)).second) {
                        auto w2 = w;
                        w2.push_back(k);
                        next.push_back({m, w2});
                    }
                }
            }
        level = std::move(next);
    }
    return true;
}

} // namespace sl3
