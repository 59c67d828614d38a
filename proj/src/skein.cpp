#include "sl3/skein.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sl3 {

namespace {

const char* kTriangle = R"({"marked_points": ["1", "2", "3"],
 "boundary_components": [["1", "2", "3"]],
 "edges": [
  {"name": "E12", "ends": ["1", "2"], "kind": "boundary"},
  {"name": "E23", "ends": ["2", "3"], "kind": "boundary"},
  {"name": "E13", "ends": ["1", "3"], "kind": "boundary"}],
 "triangles": [
  {"name": "T", "corners": ["1", "2", "3"], "sides": ["E12", "E23", "~E13"]}],
 "signs": {"T": "+"}})";

const char* kQuadrilateral = R"({"marked_points": ["1", "2", "3", "4"],
 "boundary_components": [["1", "2", "3", "4"]],
 "edges": [
  {"name": "E12", "ends": ["1", "2"], "kind": "boundary"},
  {"name": "E23", "ends": ["2", "3"], "kind": "boundary"},
  {"name": "E34", "ends": ["3", "4"], "kind": "boundary"},
  {"name": "E41", "ends": ["4", "1"], "kind": "boundary"},
  {"name": "E13", "ends": ["1", "3"], "kind": "internal"}],
 "triangles": [
  {"name": "T123", "corners": ["1", "2", "3"], "sides": ["E12", "E23", "~E13"]},
  {"name": "T134", "corners": ["1", "3", "4"], "sides": ["E13", "E34", "E41"]}],
 "signs": {"T123": "+", "T134": "-"}})";

const char* kPentagon = R"({"marked_points": ["1", "2", "3", "4", "5"],
 "boundary_components": [["1", "2", "3", "4", "5"]],
 "edges": [
  {"name": "E12", "ends": ["1", "2"], "kind": "boundary"},
  {"name": "E23", "ends": ["2", "3"], "kind": "boundary"},
  {"name": "E34", "ends": ["3", "4"], "kind": "boundary"},
  {"name": "E45", "ends": ["4", "5"], "kind": "boundary"},
  {"name": "E51", "ends": ["5", "1"], "kind": "boundary"},
  {"name": "E13", "ends": ["1", "3"], "kind": "internal"},
  {"name": "E14", "ends": ["1", "4"], "kind": "internal"}],
 "triangles": [
  {"name": "T123", "corners": ["1", "2", "3"], "sides": ["E12", "E23", "~E13"]},
  {"name": "T134", "corners": ["1", "3", "4"], "sides": ["E13", "E34", "~E14"]},
  {"name": "T145", "corners": ["1", "4", "5"], "sides": ["E14", "E45", "E51"]}],
 "signs": {"T123": "+", "T134": "+", "T145": "+"}})";

const char* kAnnulus = R"({"marked_points": ["p", "q"],
 "boundary_components": [["p"], ["q"]],
 "edges": [
  {"name": "Bp", "ends": ["p", "p"], "kind": "boundary"},
  {"name": "Bq", "ends": ["q", "q"], "kind": "boundary"},
  {"name": "E1", "ends": ["p", "q"], "kind": "internal"},
  {"name": "E2", "ends": ["p", "q"], "kind": "internal"}],
 "triangles": [
  {"name": "T1", "corners": ["p", "p", "q"], "sides": ["Bp", "E2", "~E1"]},
  {"name": "T2", "corners": ["p", "q", "q"], "sides": ["E1", "Bq", "~E2"]}],
 "signs": {"T1": "+", "T2": "+"}})";

IVec grad(int np, std::initializer_list<std::pair<int, int>> away_toward) {
    IVec g = IVec::Zero(2 * np);
    int p = 0;
    for (auto [a, t] : away_toward) {
        g[2 * p] = a;
        g[2 * p + 1] = t;
        ++p;
    }
    return g;
}

IVec arc_grading(int np, int a, int b) {
    IVec g = IVec::Zero(2 * np);
    g[2 * a] += 1;
    g[2 * b + 1] += 1;
    return g;
}

IVec triad_grading(int np, std::vector<int> pts, int sign) {
    IVec g = IVec::Zero(2 * np);
    for (int p : pts) g[2 * p + (sign > 0 ? 0 : 1)] += 1;
    return g;
}

std::string vec_str(const IVec& v) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

} // namespace

DecoratedTriangulation builtin_triangulation(const std::string& name) {
    if (name == "triangle") return parse_triangulation(kTriangle);
    if (name == "quadrilateral") return parse_triangulation(kQuadrilateral);
    if (name == "pentagon") return parse_triangulation(kPentagon);
    if (name == "annulus11") return parse_triangulation(kAnnulus);
    throw InputError("unknown built-in triangulation '" + name + "'");
}

std::vector<CatalogWeb> polygon_catalog(const std::string& tag) {
    std::vector<CatalogWeb> c;
    int np;
    if (tag == "triangle") np = 3;
    else if (tag == "quadrilateral") np = 4;
    else throw InputError("no web catalog for '" + tag + "'");
    for (int a = 0; a < np; ++a)
        for (int b = 0; b < np; ++b)
            if (a != b) c.push_back({"e" + std::to_string(a + 1) + std::to_string(b + 1), arc_grading(np, a, b)});
    if (np == 3) {
        c.push_back({"t+", triad_grading(3, {0, 1, 2}, +1)});
        c.push_back({"t-", triad_grading(3, {0, 1, 2}, -1)});
        return c;
    }
    const std::vector<std::pair<std::string, std::vector<int>>> tri = {
        {"t124", {0, 1, 3}}, {"t231", {0, 1, 2}}, {"t342", {1, 2, 3}}, {"t413", {0, 2, 3}}};
    for (auto& [n, pts] : tri) {
        c.push_back({n + "+", triad_grading(4, pts, +1)});
        c.push_back({n + "-", triad_grading(4, pts, -1)});
    }
    c.push_back({"h1", grad(4, {{0, 1}, {1, 0}, {1, 0}, {0, 1}})});
    c.push_back({"h2", grad(4, {{0, 1}, {0, 1}, {1, 0}, {1, 0}})});
    c.push_back({"h3", grad(4, {{1, 0}, {0, 1}, {0, 1}, {1, 0}})});
    c.push_back({"h4", grad(4, {{1, 0}, {1, 0}, {0, 1}, {0, 1}})});
    return c;
}

IVec endpoint_class(const TorusElement& x, const IMat& end_map, bool* homogeneous) {
    Grade g = grade(x, end_map.transpose());
    if (homogeneous) *homogeneous = g.homogeneous;
    return g.value;
}

std::vector<std::string> WebDictionary::names() const {
    std::vector<std::string> r;
    for (auto& kv : entries) r.push_back(kv.first);
    return r;
}

const TorusElement& WebDictionary::at(const std::string& name) const {
    auto it = entries.find(name);
    if (it == entries.end()) throw InputError("unknown web '" + name + "'");
    return it->second;
}

WebDictionary build_dictionary(const std::string& tag, const DecoratedTriangulation& d) {
    WebDictionary dict;
    dict.tag = tag;
    dict.root = surface_seed(d);
    dict.end_map = grading_matrix(d);
    auto catalog = polygon_catalog(tag);
    Enumeration e = enumerate(dict.root, 1000);
    // word that first produced each variable
    std::map<std::string, std::string> origin;
    for (auto& c : e.clusters)
        for (int i = 0; i < c.seed.n(); ++i) {
            std::string key = c.seed.frame[i].json();
            std::string w = c.word.empty() ? "initial" : "mutation";
            if (!c.word.empty()) {
                w += " ";
                for (size_t k = 0; k < c.word.size(); ++k) w += (k ? "," : "") + std::to_string(c.word[k]);
            }
            auto it = origin.find(key);
            if (it == origin.end() || (it->second != "initial" && w.size() < it->second.size())) origin[key] = w;
        }
    for (size_t v = 0; v < e.variables.size(); ++v) {
        const TorusElement& x = e.variables[v];
        bool hom = false;
        IVec g = endpoint_class(x, dict.end_map, &hom);
        if (!hom) throw std::logic_error("inhomogeneous cluster variable " + x.json());
        std::string name;
        for (auto& w : catalog)
            if (w.grading == g) {
                if (!name.empty()) throw std::logic_error("grading collision at " + vec_str(g));
                name = w.name;
            }
        if (name.empty()) throw std::logic_error("no elementary web with grading " + vec_str(g));
        if (dict.entries.count(name)) throw std::logic_error("two variables named " + name);
        dict.entries.emplace(name, x);
        dict.grading[name] = g;
        dict.provenance[name] = origin.count(x.json()) ? origin[x.json()] : "grading-matched";
    }
    if (dict.entries.size() != catalog.size())
        throw std::logic_error("enumeration shortfall: " + std::to_string(dict.entries.size()) + " of " +
                               std::to_string(catalog.size()) + " webs");
    return dict;
}

WebDictionary build_dictionary(const std::string& tag) { return build_dictionary(tag, builtin_triangulation(tag)); }

TorusElement evaluate_word(const WebDictionary& dict, const std::vector<std::string>& word, int qshift_twice) {
    TorusElement r = TorusElement::unit(dict.root.root());
    for (auto& w : word) r = r * dict.at(w);
    return r.shifted(qshift_twice);
}

std::string row_text(const RelationRow& r) {
    std::ostringstream os;
    for (auto& n : r.left) os << n << " ";
    os << "=";
    bool first = true;
    for (auto& t : r.right) {
        os << (first ? " " : " + ");
        first = false;
        if (t.twice) os << "A^(" << (t.twice % 2 ? std::to_string(t.twice) + "/2" : std::to_string(t.twice / 2)) << ")";
        os << "[";
        for (size_t i = 0; i < t.names.size(); ++i) os << (i ? " " : "") << t.names[i];
        os << "]";
    }
    return os.str();
}

std::string RelationCheck::text() const {
    std::ostringstream os;
    os << (pass ? "pass " : "MISMATCH ") << row.name << " (" << row.kind << "): " << row_text(row);
    if (!note.empty()) os << " -- " << note;
    return os.str();
}

namespace {

RelationRow qc(const std::string& name, const std::string& a, const std::string& b, int twice) {
    return {name, {a, b}, {{twice, {a, b}}}, "q-commutation"};
}

} // namespace

std::vector<RelationRow> triangle_table() {
    std::vector<RelationRow> r;
    r.push_back(qc("e21e12", "e21", "e12", 0));
    r.push_back(qc("e32e23", "e32", "e23", 0));
    r.push_back(qc("e13e31", "e13", "e31", 0));
    r.push_back(qc("e21e32", "e21", "e32", -1));
    r.push_back(qc("e21e23", "e21", "e23", -2));
    r.push_back(qc("e21e13", "e21", "e13", 1));
    r.push_back(qc("e21e31", "e21", "e31", 2));
    r.push_back(qc("e21t+", "e21", "t+", -1));
    r.push_back(qc("e21t-", "e21", "t-", 1));
    r.push_back(qc("e12e32", "e12", "e32", -2));
    r.push_back(qc("e12e23", "e12", "e23", -1));
    r.push_back(qc("e12e13", "e12", "e13", 2));
    r.push_back(qc("e12e31", "e12", "e31", 1));
    r.push_back(qc("e12t+", "e12", "t+", 1));
    r.push_back(qc("e12t-", "e12", "t-", -1));
    r.push_back({"t+t-", {"t+", "t-"}, {{3, {"e21", "e13", "e32"}}, {-3, {"e12", "e23", "e31"}}}, "exchange"});
    r.push_back({"t-t+", {"t-", "t+"}, {{-3, {"e21", "e13", "e32"}}, {3, {"e12", "e23", "e31"}}}, "exchange"});
    return r;
}

std::vector<RelationRow> quadrilateral_table() {
    std::vector<RelationRow> r;
    auto Q = [&](int i, const std::string& a, const std::string& b, int twice) {
        r.push_back(qc("Q" + std::to_string(i), a, b, twice));
    };
    auto X = [&](int i, std::vector<std::string> left, std::vector<RhsTerm> right, const std::string& kind) {
        r.push_back({"Q" + std::to_string(i), left, right, kind});
    };
    Q(1, "t124+", "t231+", -2);
    Q(2, "t124+", "t342+", 0);
    Q(3, "t124+", "t413+", 2);
    X(4, {"t124+", "t124-"}, {{-3, {"e12", "e24", "e41"}}, {3, {"e21", "e14", "e42"}}}, "sign-change");
    X(5, {"t124+", "t231-"}, {{-4, {"e12", "e23", "e41"}}, {2, {"e21", "h3"}}}, "other");
    Q(6, "t124+", "t342-", 0);
    X(7, {"t124+", "t413-"}, {{4, {"e21", "e14", "e43"}}, {2, {"e41", "h2"}}}, "other");
    X(8, {"t124+", "e31"}, {{-3, {"e41", "t231+"}}, {3, {"e21", "t413+"}}}, "first-mutation");
    Q(9, "t124+", "e42", 1);
    Q(10, "t124+", "e13", 0);
    Q(11, "t124+", "e24", -1);
    X(12, {"t124+", "h1"}, {{2, {"e21", "e14", "t342+"}}, {-4, {"e41", "e24", "t231+"}}}, "other");
    X(13, {"t124+", "h2"}, {{-2, {"e12", "e41", "t413-"}}, {4, {"e21", "e42", "t413+"}}}, "other");
    Q(14, "t124+", "h3", 1);
    Q(15, "t124+", "h4", -1);
    X(16, {"e31", "e42"}, {{4, {"e32", "e41"}}, {-2, {"h2"}}}, "other");
    Q(17, "e31", "e13", 0);
    X(18, {"e31", "e24"}, {{-4, {"e21", "e34"}}, {2, {"h1"}}}, "other");
    Q(19, "e31", "h1", 2);
    Q(20, "e31", "h2", -2);
    X(21, {"e31", "h3"}, {{-2, {"t231-", "t413+"}}, {4, {"e32", "e41", "e13"}}}, "other");
    X(22, {"e31", "h4"}, {{2, {"t231+", "t413-"}}, {-4, {"e21", "e13", "e34"}}}, "other");
    X(23, {"h1", "h2"}, {{2, {"e21", "e32", "e34", "e41"}}, {-4, {"e31", "t124-", "t342+"}}}, "other");
    X(24, {"h1", "h3"},
      {{0, {"e12", "e23", "e34", "e41"}},
       {0, {"e32", "e23", "e14", "e41"}},
       {0, {"e14", "e43", "e32", "e21"}},
       {6, {"e12", "e43", "h4"}},
       {0, {"e21", "e34", "h2"}}},
      "other");
    X(25, {"h1", "h4"}, {{-2, {"e21", "e14", "e23", "e34"}}, {2, {"e24", "t231+", "t413-"}}}, "other");
    return r;
}

std::vector<RelationCheck> verify_table(const WebDictionary& dict, const std::vector<RelationRow>& rows) {
    std::vector<RelationCheck> out;
    for (auto& row : rows) {
        RelationCheck c;
        c.row = row;
        try {
            TorusElement lhs = evaluate_word(dict, row.left);
            TorusElement rhs(dict.root.root());
            for (auto& t : row.right) {
                std::vector<TorusElement> xs;
                for (auto& n : t.names) xs.push_back(dict.at(n));
                rhs += weyl_order(xs).shifted(t.twice);
            }
            c.lhs = lhs.json();
            c.rhs = rhs.json();
            c.pass = lhs == rhs;
            if (!c.pass && row.kind == "q-commutation") {
                auto e = q_commutator(dict.at(row.left[0]), dict.at(row.left[1]));
                if (e) c.note = "computed exponent A^(" + std::to_string(*e) + "/2)";
            }
        } catch (const std::exception& ex) {
            c.pass = false;
            c.note = ex.what();
        }
        out.push_back(c);
    }
    return out;
}

std::vector<RelationCheck> verify_table(const std::string& tag) {
    WebDictionary d = build_dictionary(tag);
    if (tag == "triangle") return verify_table(d, triangle_table());
    return verify_table(d, quadrilateral_table());
}

LaurentDemo triangle_laurent_demo(const std::vector<std::string>& word, int eps) {
    DecoratedTriangulation d = builtin_triangulation("triangle");
    d.sign[0] = eps;
    WebDictionary dict = build_dictionary("triangle", d);
    IndexSet I = build_index_set(d);
    const int f = I.face_vertex(0);
    TorusElement x = evaluate_word(dict, word);
    int low = 0;
    for (auto& [a, c] : x.terms()) low = std::min(low, a[f]);
    LaurentDemo r;
    r.k = -low;
    r.poly = dict.at(eps > 0 ? "t+" : "t-").pow(r.k) * x;
    r.positive = r.poly.is_positive();
    return r;
}

} // namespace sl3
