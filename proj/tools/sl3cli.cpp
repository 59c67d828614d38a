#include "sl3/io.hpp"
#include "sl3/skein.hpp"
#include "sl3/suites.hpp"
#include "sl3/webexpand.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace sl3;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kVersion = 1;

struct Args {
    std::string triangulation, signs, seed, word, suite, loop, out;
    int max = 100000;
    int bangle = 0, bracelet = 0, biangle = 0;
};

// FNV-1a, enough to tell inputs apart in a report
std::string digest(const std::string& s) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Loaded {
    DecoratedTriangulation d;
    std::string source;
};

// path or built-in name
Loaded load_tri(const Args& a) {
    if (a.triangulation.empty()) throw InputError("--triangulation required");
    Loaded l;
    if (std::filesystem::exists(a.triangulation)) {
        l.source = slurp(a.triangulation);
        l.d = parse_triangulation(l.source);
    } else {
        l.d = builtin_triangulation(a.triangulation);
        l.source = a.triangulation;
    }
    if (!a.signs.empty()) {
        l.d.sign = parse_signs(a.signs, int(l.d.tri.triangles.size()));
        l.source += "|" + a.signs;
    }
    return l;
}

QuantumSeed load_any_seed(const Args& a, ojson& inputs) {
    if (!a.seed.empty()) {
        std::string text = slurp(a.seed);
        inputs["seed"] = a.seed;
        inputs["digest"] = digest(text);
        return parse_seed(text);
    }
    Loaded l = load_tri(a);
    inputs["triangulation"] = a.triangulation;
    if (!a.signs.empty()) inputs["signs"] = a.signs;
    inputs["digest"] = digest(l.source);
    return surface_seed(l.d);
}

ojson raw(const std::string& s) { return ojson::parse(s); }

std::vector<int> parse_word(const std::string& w) {
    std::vector<int> r;
    std::stringstream ss(w);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            size_t pos;
            r.push_back(std::stoi(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw InputError("bad mutation index '" + tok + "'");
        }
    }
    return r;
}

struct Outcome {
    ojson report;
    int code = 0;
    std::string summary;
};

Outcome cmd_quiver(const Args& a) {
    Outcome o;
    ojson in;
    Loaded l = load_tri(a);
    in["triangulation"] = a.triangulation;
    if (!a.signs.empty()) in["signs"] = a.signs;
    in["digest"] = digest(l.source);
    QuantumSeed s = surface_seed(l.d);
    CompatibilityReport c = verify_compatibility(s.pair);
    ojson arrows = ojson::array();
    for (int i = 0; i < s.n(); ++i)
        for (int j = 0; j < s.n(); ++j)
            if (s.pair.B.b2(j, i) > 0) arrows.push_back({s.labels[i], s.labels[j], s.pair.B.b2(j, i) / 2.0});
    o.report["inputs"] = in;
    o.report["verdicts"] = {{"compatible", c.ok}, {"violations", c.violations}};
    o.report["artifacts"] = {{"labels", s.labels},
                             {"frozen", raw(seed_json(s))["frozen"]},
                             {"B2", raw(matrix_json(s.pair.B.b2))},
                             {"pi", raw(matrix_json(s.pair.pi))},
                             {"D", c.diagonal},
                             {"arrows", arrows}};
    o.code = c.ok ? 0 : 1;
    o.summary = std::to_string(s.n()) + " vertices, " + std::to_string(arrows.size()) + " arrows, compatibility " +
                (c.ok ? "ok" : "FAILED");
    return o;
}

Outcome cmd_mutate(const Args& a) {
    Outcome o;
    ojson in;
    QuantumSeed s = load_any_seed(a, in);
    std::vector<int> w = parse_word(a.word);
    in["word"] = w;
    for (int k : w) {
        if (k < 0 || k >= s.n()) throw InputError("mutation index " + std::to_string(k) + " out of range");
        if (s.frozen()[k]) throw InputError("mutation at frozen index " + std::to_string(k));
    }
    QuantumSeed m = mutate_word(s, w);
    CompatibilityReport c = verify_compatibility(m.pair);
    BarReport b = bar_check(m);
    bool pos = true;
    for (auto& x : m.frame) pos = pos && x.is_positive();
    o.report["inputs"] = in;
    o.report["verdicts"] = {{"compatible", c.ok}, {"bar_invariant", b.ok}, {"positive", pos}};
    o.report["artifacts"] = {{"seed", raw(seed_json(m))}};
    o.code = c.ok ? 0 : 1;
    o.summary = "mutated along " + std::to_string(w.size()) + " steps; compatible " + (c.ok ? "yes" : "no") +
                ", positive " + (pos ? "yes" : "no") + ", bar-invariant " + (b.ok ? "yes" : "no");
    return o;
}

Outcome cmd_enumerate(const Args& a) {
    Outcome o;
    ojson in;
    QuantumSeed s = load_any_seed(a, in);
    in["max"] = a.max;
    o.report["inputs"] = in;
    Enumeration e;
    try {
        e = enumerate(s, a.max);
    } catch (const BoundExceeded& ex) {
        o.report["verdicts"] = {{"bound_exceeded", true}, {"message", ex.what()}};
        o.code = 1;
        o.summary = std::string("bound exceeded: ") + ex.what();
        return o;
    }
    int frozen = 0;
    ojson bad_pos = ojson::array(), bad_bar = ojson::array(), vars = ojson::array();
    for (size_t i = 0; i < e.variables.size(); ++i) {
        frozen += e.variable_frozen[i];
        if (!e.variables[i].is_positive()) bad_pos.push_back(i);
        if (!e.variables[i].is_bar_invariant()) bad_bar.push_back(i);
        vars.push_back({{"frozen", bool(e.variable_frozen[i])}, {"element", raw(e.variables[i].json())}});
    }
    ojson clusters = ojson::array();
    for (auto& c : e.clusters) clusters.push_back({{"word", c.word}, {"key", c.key}});
    o.report["verdicts"] = {{"bound_exceeded", false},
                            {"clusters", e.clusters.size()},
                            {"variables", e.variables.size()},
                            {"unfrozen", int(e.variables.size()) - frozen},
                            {"frozen", frozen},
                            {"positive", bad_pos.empty()},
                            {"bar_invariant", bad_bar.empty()},
                            {"not_positive", bad_pos},
                            {"not_bar_invariant", bad_bar}};
    o.report["artifacts"] = {{"clusters", clusters}, {"variables", vars}};
    o.code = bad_pos.empty() && bad_bar.empty() ? 0 : 1;
    o.summary = std::to_string(e.clusters.size()) + " clusters, " + std::to_string(e.variables.size()) +
                " variables (" + std::to_string(frozen) + " frozen); positive " + (bad_pos.empty() ? "yes" : "no") +
                ", bar-invariant " + (bad_bar.empty() ? "yes" : "no");
    return o;
}

Outcome cmd_verify(const Args& a) {
    Outcome o;
    if (a.suite.empty()) throw InputError("--suite required");
    SuiteResult r = run_suite(a.suite);
    ojson checks = ojson::array();
    int failed = 0;
    for (auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        failed += !c.pass;
    }
    o.report["inputs"] = {{"suite", a.suite}};
    o.report["verdicts"] = {{"pass", r.ok()}, {"checks", checks}};
    o.report["artifacts"] = {{"discrepancies", r.discrepancies}};
    o.code = r.ok() ? 0 : 1;
    std::ostringstream ss;
    ss << "suite " << a.suite << ": " << r.checks.size() - failed << "/" << r.checks.size() << " checks pass";
    for (auto& c : r.checks)
        if (!c.pass) ss << "\n  FAIL " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")");
    if (!r.discrepancies.empty()) ss << "\n  " << r.discrepancies.size() << " table rows differ (see report)";
    o.summary = ss.str();
    return o;
}

Outcome cmd_expand(const Args& a) {
    Outcome o;
    Loaded l = load_tri(a);
    if (a.loop.empty()) throw InputError("--loop required");
    if (a.bangle && a.bracelet) throw InputError("--bangle and --bracelet are exclusive");
    if (a.bangle < 0 || a.bracelet < 0) throw InputError("n must be >= 1");
    LoopDescriptor loop = parse_loop(l.d.tri, a.loop);
    validate_loop(l.d.tri, loop);
    WebOnSplit w = loop_to_web(l.d.tri, loop);
    std::string kind = "loop";
    if (a.bangle) {
        w = bangle(w, a.bangle);
        kind = "bangle " + std::to_string(a.bangle);
    } else if (a.bracelet) {
        if (a.biangle < 0 || a.biangle >= int(w.braids.size())) throw InputError("--biangle out of range");
        w = bracelet(w, a.bracelet, a.biangle);
        kind = "bracelet " + std::to_string(a.bracelet);
    }
    ExpansionResult r = expand(w, l.d);
    ojson in = {{"triangulation", a.triangulation}, {"loop", a.loop}, {"web", kind}, {"digest", digest(l.source)}};
    if (!a.signs.empty()) in["signs"] = a.signs;
    o.report["inputs"] = in;
    o.report["verdicts"] = {{"positive", r.positive},
                            {"bar_invariant", r.bar_invariant},
                            {"homogeneous", r.homogeneous},
                            {"grading_zero", r.grading_zero}};
    o.report["artifacts"] = raw(r.json());
    bool ok = r.positive && r.bar_invariant && r.homogeneous && r.grading_zero;
    o.code = ok ? 0 : 1;
    o.summary = kind + ": " + std::to_string(r.x.terms().size()) + " terms; positive " + (r.positive ? "yes" : "no") +
                ", bar-invariant " + (r.bar_invariant ? "yes" : "no") + ", grading zero " +
                (r.grading_zero ? "yes" : "no");
    return o;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sl3 web cluster engine"};
    app.require_subcommand(1);
    Args a;
    auto* q = app.add_subcommand("quiver", "exchange matrix and Pi of a decorated triangulation");
    auto* m = app.add_subcommand("mutate", "mutate a seed along a word");
    auto* e = app.add_subcommand("enumerate", "enumerate the exchange graph");
    auto* v = app.add_subcommand("verify", "run a verification suite");
    auto* x = app.add_subcommand("expand", "expand a loop, bangle or bracelet");
    for (auto* s : {q, m, e, x}) {
        s->add_option("--triangulation", a.triangulation, "file or built-in name");
        s->add_option("--signs", a.signs, "+,- per triangle");
    }
    for (auto* s : {q, m, e, v, x}) s->add_option("--out", a.out, "write the report here");
    for (auto* s : {m, e}) s->add_option("--seed", a.seed, "seed file");
    m->add_option("--word", a.word, "k1,k2,...");
    e->add_option("--max", a.max, "cluster bound");
    v->add_option("--suite", a.suite, "triangle|quadrilateral|grading|flip|bangle-oracle")->required();
    x->add_option("--loop", a.loop, "T:E_in:E_out,...")->required();
    x->add_option("--bangle", a.bangle);
    x->add_option("--bracelet", a.bracelet);
    x->add_option("--biangle", a.biangle, "biangle holding the bracelet braid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? 0 : 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        if (name == "quiver") o = cmd_quiver(a);
        else if (name == "mutate") o = cmd_mutate(a);
        else if (name == "enumerate") o = cmd_enumerate(a);
        else if (name == "verify") o = cmd_verify(a);
        else o = cmd_expand(a);
    } catch (const InputError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return 2;
    } catch (const std::out_of_range& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return 2;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    ojson rep;
    rep["version"] = kVersion;
    rep["command"] = name;
    rep["exit_code"] = o.code;
    for (auto& [k, val] : o.report.items()) rep[k] = val;
    const std::string text = rep.dump(1) + "\n";
    if (!a.out.empty()) {
        std::ofstream f(a.out);
        if (!f) {
            std::cerr << "input error: cannot write " << a.out << "\n";
            return 2;
        }
        f << text;
    } else {
        std::cout << text;
    }
    std::cerr << o.summary << "\n";
    std::fprintf(stderr, "(%.2fs)\n", secs);
    return o.code;
}
