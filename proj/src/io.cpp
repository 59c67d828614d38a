#include "sl3/io.hpp"

#include "sl3/surface.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace sl3 {

using nlohmann::json;

namespace {

json matrix_to(const IMat& m) {
    json r = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        r.push_back(row);
    }
    return r;
}

IMat matrix_from(const json& j, int n, const char* what) {
    if (!j.is_array() || int(j.size()) != n) throw InputError(std::string(what) + " must be " + std::to_string(n) + " rows");
    IMat m(n, n);
    for (int i = 0; i < n; ++i) {
        if (!j[i].is_array() || int(j[i].size()) != n) throw InputError(std::string(what) + " row has wrong length");
        for (int k = 0; k < n; ++k) m(i, k) = j[i][k].get<long long>();
    }
    return m;
}

TorusElement element_from(FormPtr f, const json& j) {
    TorusElement x(f);
    if (!j.is_array()) throw InputError("torus element must be a list of terms");
    for (auto& term : j) {
        if (!term.is_array() || term.size() != 2) throw InputError("term must be [exponent, coefficient]");
        ExpVec a = term[0].get<ExpVec>();
        if (int(a.size()) != f->n()) throw InputError("exponent has wrong length");
        QLaurent c;
        for (auto& t : term[1]) c.add_term(t[0].get<int>(), BigInt(t[1].get<std::string>()));
        x.add_term(a, c);
    }
    return x;
}

} // namespace

std::string seed_json(const QuantumSeed& s) {
    json j;
    j["version"] = 1;
    j["labels"] = s.labels;
    std::vector<int> fr;
    for (int i = 0; i < s.n(); ++i)
        if (s.frozen()[i]) fr.push_back(i);
    j["frozen"] = fr;
    j["B2"] = matrix_to(s.pair.B.b2);
    j["pi"] = matrix_to(s.pair.pi);
    j["root_pi"] = matrix_to(s.root()->pi);
    json frame = json::array();
    for (auto& x : s.frame) frame.push_back(json::parse(x.json()));
    j["frame"] = frame;
    return j.dump(1);
}

QuantumSeed parse_seed(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("seed file: ") + e.what());
    }
    try {
        QuantumSeed s;
        s.labels = j.at("labels").get<std::vector<std::string>>();
        const int n = int(s.labels.size());
        s.pair.B.b2 = matrix_from(j.at("B2"), n, "B2");
        s.pair.B.frozen.assign(n, false);
        for (int i : j.at("frozen").get<std::vector<int>>()) {
            if (i < 0 || i >= n) throw InputError("frozen index out of range");
            s.pair.B.frozen[i] = true;
        }
        s.pair.pi = matrix_from(j.at("pi"), n, "pi");
        FormPtr root = make_form(j.contains("root_pi") ? matrix_from(j["root_pi"], n, "root_pi") : s.pair.pi);
        if (!root->is_skew()) throw InputError("pi is not skew-symmetric");
        if (j.contains("frame")) {
            if (int(j["frame"].size()) != n) throw InputError("frame has wrong length");
            for (auto& x : j["frame"]) s.frame.push_back(element_from(root, x));
        } else {
            for (int i = 0; i < n; ++i) s.frame.push_back(TorusElement::basis(root, i));
        }
        return s;
    } catch (const json::exception& e) {
        throw InputError(std::string("seed file: ") + e.what());
    }
}

QuantumSeed load_seed(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_seed(ss.str());
}

TorusElement parse_torus_element(FormPtr f, const std::string& text) {
    try {
        return element_from(f, json::parse(text));
    } catch (const json::exception& e) {
        throw InputError(e.what());
    }
}

} // namespace sl3
