#include "sl3/surface.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace sl3 {

using nlohmann::json;

int Triangulation::point_index(const std::string& p) const {
    for (size_t i = 0; i < points.size(); ++i)
        if (points[i] == p) return int(i);
    throw InputError("unknown marked point '" + p + "'");
}

int Triangulation::edge_index(const std::string& e) const {
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].name == e) return int(i);
    throw InputError("unknown edge '" + e + "'");
}

int Triangulation::triangle_index(const std::string& t) const {
    for (size_t i = 0; i < triangles.size(); ++i)
        if (triangles[i].name == t) return int(i);
    throw InputError("unknown triangle '" + t + "'");
}

void Triangulation::validate() const {
    if (points.empty()) throw InputError("no marked points");
    if (triangles.empty()) throw InputError("no triangles");
    std::vector<int> uses(edges.size(), 0);
    for (auto& t : triangles)
        for (int i = 0; i < 3; ++i) {
            const Edge& e = edges[t.side[i]];
            int a = t.corners[i], b = t.corners[(i + 1) % 3];
            int s = t.reversed[i] ? e.ends[1] : e.ends[0];
            int f = t.reversed[i] ? e.ends[0] : e.ends[1];
            if (s != a || f != b)
                throw InputError("triangle " + t.name + ": side " + std::to_string(i) + " (" + e.name +
                                 ") does not run " + points[a] + "->" + points[b]);
            ++uses[t.side[i]];
        }
    int nb = 0;
    for (size_t i = 0; i < edges.size(); ++i) {
        int want = edges[i].boundary ? 1 : 2;
        if (uses[i] != want)
            throw InputError("edge " + edges[i].name + " borders " + std::to_string(uses[i]) + " sides, expected " +
                             std::to_string(want));
        nb += edges[i].boundary;
    }
    size_t on_boundary = 0;
    std::set<int> seen;
    for (auto& c : boundary_components) {
        if (c.empty()) throw InputError("empty boundary component");
        for (int p : c)
            if (!seen.insert(p).second) throw InputError("marked point on two boundary components");
        on_boundary += c.size();
    }
    if (on_boundary != points.size()) throw InputError("every marked point must lie on a boundary component");
    // n = -3 chi + 2|M|
    long long chi = (long long)points.size() - (long long)edges.size() + (long long)triangles.size();
    if (-3 * chi + 2 * (long long)points.size() != (long long)edges.size())
        throw InputError("edge count fails the Euler count");
    if (nb != int(points.size())) throw InputError("boundary interval count differs from |M|");
}

DecoratedTriangulation parse_triangulation(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("triangulation parse error: ") + e.what());
    }
    DecoratedTriangulation d;
    Triangulation& t = d.tri;
    try {
        for (auto& p : j.at("marked_points")) t.points.push_back(p.get<std::string>());
        for (auto& c : j.at("boundary_components")) {
            std::vector<int> comp;
            for (auto& p : c) comp.push_back(t.point_index(p.get<std::string>()));
            t.boundary_components.push_back(comp);
        }
        for (auto& e : j.at("edges")) {
            Edge ed;
            ed.name = e.at("name").get<std::string>();
            auto ends = e.at("ends");
            if (ends.size() != 2) throw InputError("edge " + ed.name + " needs two ends");
            ed.ends = {t.point_index(ends[0].get<std::string>()), t.point_index(ends[1].get<std::string>())};
            std::string kind = e.at("kind").get<std::string>();
            if (kind != "boundary" && kind != "internal") throw InputError("edge kind must be boundary|internal");
            ed.boundary = kind == "boundary";
            t.edges.push_back(ed);
        }
        for (auto& tr : j.at("triangles")) {
            Triangle T;
            T.name = tr.at("name").get<std::string>();
            auto cs = tr.at("corners");
            auto ss = tr.at("sides");
            if (cs.size() != 3 || ss.size() != 3) throw InputError("triangle " + T.name + " needs 3 corners and sides");
            for (int i = 0; i < 3; ++i) {
                T.corners[i] = t.point_index(cs[i].get<std::string>());
                std::string s = ss[i].get<std::string>();
                T.reversed[i] = !s.empty() && s[0] == '~';
                T.side[i] = t.edge_index(T.reversed[i] ? s.substr(1) : s);
            }
            t.triangles.push_back(T);
        }
        d.sign.assign(t.triangles.size(), +1);
        if (j.contains("signs")) {
            for (auto& [name, v] : j.at("signs").items()) {
                std::string s = v.get<std::string>();
                if (s != "+" && s != "-") throw InputError("sign must be + or -");
                d.sign[t.triangle_index(name)] = s == "+" ? 1 : -1;
            }
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("triangulation schema error: ") + e.what());
    }
    t.validate();
    return d;
}

DecoratedTriangulation load_triangulation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_triangulation(ss.str());
}

std::vector<int> parse_signs(const std::string& s, int count) {
    std::vector<int> r;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "+") r.push_back(1);
        else if (tok == "-") r.push_back(-1);
        else throw InputError("bad sign '" + tok + "'");
    }
    if (int(r.size()) != count) throw InputError("expected " + std::to_string(count) + " signs");
    return r;
}

std::string triangulation_json(const DecoratedTriangulation& d) {
    const auto& t = d.tri;
    json j;
    j["marked_points"] = t.points;
    json bc = json::array();
    for (auto& c : t.boundary_components) {
        json a = json::array();
        for (int p : c) a.push_back(t.points[p]);
        bc.push_back(a);
    }
    j["boundary_components"] = bc;
    json es = json::array();
    for (auto& e : t.edges)
        es.push_back({{"name", e.name},
                      {"ends", {t.points[e.ends[0]], t.points[e.ends[1]]}},
                      {"kind", e.boundary ? "boundary" : "internal"}});
    j["edges"] = es;
    json ts = json::array();
    json signs = json::object();
    for (size_t i = 0; i < t.triangles.size(); ++i) {
        auto& T = t.triangles[i];
        json cs = json::array(), ss = json::array();
        for (int k = 0; k < 3; ++k) {
            cs.push_back(t.points[T.corners[k]]);
            ss.push_back((T.reversed[k] ? "~" : "") + t.edges[T.side[k]].name);
        }
        ts.push_back({{"name", T.name}, {"corners", cs}, {"sides", ss}});
        signs[T.name] = d.sign[i] > 0 ? "+" : "-";
    }
    j["triangles"] = ts;
    j["signs"] = signs;
    return j.dump();
}

IndexSet build_index_set(const DecoratedTriangulation& d) {
    const auto& t = d.tri;
    IndexSet I;
    I.n_edges = int(t.edges.size());
    I.n_triangles = int(t.triangles.size());
    I.frozen.assign(I.size(), false);
    I.labels.resize(I.size());
    std::map<std::string, int> count;
    std::vector<std::string> plain(I.size());
    for (int e = 0; e < I.n_edges; ++e)
        for (int x = 0; x < 2; ++x) {
            const Edge& E = t.edges[e];
            plain[I.edge_vertex(e, x)] = "e" + t.points[E.ends[1 - x]] + t.points[E.ends[x]];
            I.frozen[I.edge_vertex(e, x)] = E.boundary;
        }
    for (int k = 0; k < I.n_triangles; ++k) {
        const Triangle& T = t.triangles[k];
        std::string s = "t";
        for (int c : T.corners) s += t.points[c];
        plain[I.face_vertex(k)] = s + (d.sign[k] > 0 ? "+" : "-");
    }
    for (auto& s : plain) ++count[s];
    for (int i = 0; i < I.size(); ++i) {
        if (count[plain[i]] == 1) {
            I.labels[i] = plain[i];
        } else if (I.is_face(i)) {
            int k = i - 2 * I.n_edges;
            I.labels[i] = "t_" + t.triangles[k].name + (d.sign[k] > 0 ? "+" : "-");
        } else {
            int e = i / 2, x = i % 2;
            const Edge& E = t.edges[e];
            I.labels[i] = E.name + "_" + t.points[E.ends[1 - x]] + t.points[E.ends[x]];
            if (E.ends[0] == E.ends[1]) I.labels[i] += (x ? "'" : "");
        }
    }
    return I;
}

IMat triangle_quiver(int sign) {
    // F_i = 2i, S_i = 2i+1, k = 6
    IMat b = IMat::Zero(7, 7);
    auto arrow = [&](int i, int j, int w) {
        b(j, i) += w;
        b(i, j) -= w;
    };
    for (int i = 0; i < 3; ++i) {
        int F = 2 * i, S = 2 * i + 1, Sprev = 2 * ((i + 2) % 3) + 1;
        arrow(6, S, 2);
        arrow(F, 6, 2);
        arrow(S, F, 1);
        arrow(Sprev, F, 2);
    }
    if (sign < 0) {
        ExchangeMatrix B{b, std::vector<bool>(7, false)};
        return mutate_matrix(B, 6).b2;
    }
    return b;
}

ExchangeMatrix build_quiver(const DecoratedTriangulation& d) {
    IndexSet I = build_index_set(d);
    ExchangeMatrix B;
    B.b2 = IMat::Zero(I.size(), I.size());
    B.frozen = I.frozen;
    for (int k = 0; k < I.n_triangles; ++k) {
        const Triangle& T = d.tri.triangles[k];
        IMat q = triangle_quiver(d.sign[k]);
        int g[7];
        for (int i = 0; i < 3; ++i) {
            g[2 * i] = I.edge_vertex(T.side[i], T.first_end(i));
            g[2 * i + 1] = I.edge_vertex(T.side[i], 1 - T.first_end(i));
        }
        g[6] = I.face_vertex(k);
        for (int a = 0; a < 7; ++a)
            for (int b = 0; b < 7; ++b) B.b2(g[a], g[b]) += q(a, b);
    }
    return B;
}

Fans build_fans(const Triangulation& t) {
    Fans f;
    // corners at each point
    std::map<std::pair<int, int>, std::pair<int, int>> by_first;  // (e,end) -> corner
    for (size_t k = 0; k < t.triangles.size(); ++k)
        for (int i = 0; i < 3; ++i) {
            const Triangle& T = t.triangles[k];
            by_first[{T.side[i], T.first_end(i)}] = {int(k), i};
        }
    for (size_t e = 0; e < t.edges.size(); ++e) {
        if (!t.edges[e].boundary) continue;
        for (int end = 0; end < 2; ++end) {
            auto it = by_first.find({int(e), end});
            if (it == by_first.end()) continue;
            // walk the fan from this boundary edge-end
            int p = t.edges[e].ends[end];
            int slot = 0;
            std::pair<int, int> ee{int(e), end};
            f.edge_end[ee] = {p, slot};
            while (true) {
                auto c = by_first.find(ee);
                if (c == by_first.end()) break;
                auto [k, i] = c->second;
                const Triangle& T = t.triangles[k];
                f.corner[{k, i}] = {p, ++slot};
                int s = (i + 2) % 3;
                ee = {T.side[s], T.last_end(i)};
                f.edge_end[ee] = {p, ++slot};
                if (t.edges[ee.first].boundary) break;
            }
        }
    }
    if (f.edge_end.size() != 2 * t.edges.size()) throw InputError("fan walk did not reach every edge end");
    return f;
}

std::vector<ElementaryWeb> web_cluster(const DecoratedTriangulation& d) {
    const auto& t = d.tri;
    IndexSet I = build_index_set(d);
    Fans f = build_fans(t);
    std::vector<ElementaryWeb> webs(I.size());
    for (int e = 0; e < I.n_edges; ++e)
        for (int x = 0; x < 2; ++x) {
            ElementaryWeb& w = webs[I.edge_vertex(e, x)];
            w.kind = ElementaryWeb::Arc;
            w.edge = e;
            w.end = x;
            for (int y = 0; y < 2; ++y) {
                auto [p, s] = f.edge_end.at({e, y});
                w.germs.push_back({p, s, y == x});
            }
        }
    for (int k = 0; k < I.n_triangles; ++k) {
        ElementaryWeb& w = webs[I.face_vertex(k)];
        w.kind = ElementaryWeb::Triad;
        w.triangle = k;
        w.sign = d.sign[k];
        for (int i = 0; i < 3; ++i) {
            auto [p, s] = f.corner.at({k, i});
            w.germs.push_back({p, s, d.sign[k] < 0});
        }
    }
    for (int i = 0; i < I.size(); ++i) webs[i].label = I.labels[i];
    return webs;
}

long long germ_pairing(const std::vector<Germ>& a, const std::vector<Germ>& b) {
    long long s = 0;
    for (auto& g : a)
        for (auto& h : b) {
            if (g.point != h.point || g.slot == h.slot) continue;
            int sign = g.slot < h.slot ? 1 : -1;
            int mag = g.in == h.in ? 2 : 1;
            s += sign * mag;
        }
    return s;
}

IMat commutation_matrix(const DecoratedTriangulation& d) {
    auto webs = web_cluster(d);
    const int n = int(webs.size());
    IMat pi = IMat::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) pi(i, j) = germ_pairing(webs[i].germs, webs[j].germs);
    return pi;
}

QuantumSeed surface_seed(const DecoratedTriangulation& d) {
    IndexSet I = build_index_set(d);
    return initial_seed(I.labels, build_quiver(d), commutation_matrix(d));
}

IVec endpoint_grading(const std::vector<Germ>& germs, int n_points) {
    IVec g = IVec::Zero(2 * n_points);
    for (auto& h : germs) g[2 * h.point + (h.in ? 1 : 0)] += 1;
    return g;
}

IMat grading_matrix(const DecoratedTriangulation& d) {
    auto webs = web_cluster(d);
    const int np = int(d.tri.points.size());
    IMat G(webs.size(), 2 * np);
    for (size_t i = 0; i < webs.size(); ++i) G.row(i) = endpoint_grading(webs[i].germs, np).transpose();
    return G;
}

IMat relabel(const IMat& m, const std::vector<int>& perm) {
    IMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(perm[i], perm[j]) = m(i, j);
    return r;
}

DecoratedTriangulation flip_triangulation(const DecoratedTriangulation& d, int edge, int* t_first, int* t_second) {
    const auto& t = d.tri;
    if (edge < 0 || edge >= int(t.edges.size())) throw InputError("edge out of range");
    if (t.edges[edge].boundary) throw InputError("cannot flip boundary edge " + t.edges[edge].name);
    int ta = -1, ia = -1, tb = -1, ib = -1;
    for (size_t k = 0; k < t.triangles.size(); ++k)
        for (int i = 0; i < 3; ++i)
            if (t.triangles[k].side[i] == edge) {
                if (ta < 0) {
                    ta = int(k);
                    ia = i;
                } else {
                    tb = int(k);
                    ib = i;
                }
            }
    if (ta == tb) throw InputError("edge " + t.edges[edge].name + " borders one triangle twice");
    const Triangle& T = t.triangles[ta];
    const Triangle& U = t.triangles[tb];
    // T = (P,R,X) with side P->R = E; U = (R,P,Y)
    int P = T.corners[ia], X = T.corners[(ia + 2) % 3];
    int Y = U.corners[(ib + 2) % 3];
    int Rside = (ia + 1) % 3, Xside = (ia + 2) % 3;  // R->X, X->P in T
    int Pside = (ib + 1) % 3, Yside = (ib + 2) % 3;  // P->Y, Y->R in U
    DecoratedTriangulation r = d;
    Edge& En = r.tri.edges[edge];
    En.ends = {X, Y};
    En.name = t.edges[edge].name + "'";
    Triangle A, B;
    A.name = T.name + "'";
    A.corners = {P, Y, X};
    A.side = {U.side[Pside], edge, T.side[Xside]};
    A.reversed = {U.reversed[Pside], true, T.reversed[Xside]};
    B.name = U.name + "'";
    B.corners = {Y, U.corners[ib], X};
    B.side = {U.side[Yside], T.side[Rside], edge};
    B.reversed = {U.reversed[Yside], T.reversed[Rside], false};
    r.tri.triangles[ta] = A;
    r.tri.triangles[tb] = B;
    r.tri.validate();
    if (t_first) *t_first = ta;
    if (t_second) *t_second = tb;
    return r;
}

FlipResult flip(const DecoratedTriangulation& d, int edge) {
    int ta, tb;
    DecoratedTriangulation dn = flip_triangulation(d, edge, &ta, &tb);
    if (d.sign[ta] < 0 || d.sign[tb] < 0)
        throw InputError("flip needs signs (+,+) on both triangles; prepend change_sign at the '-' faces");
    IndexSet I = build_index_set(d);
    QuantumSeed s = surface_seed(d);
    const int i0 = I.edge_vertex(edge, 0), i1 = I.edge_vertex(edge, 1);
    const int ja = I.face_vertex(ta), jb = I.face_vertex(tb);
    dn.sign[ta] = dn.sign[tb] = +1;
    ExchangeMatrix Bn = build_quiver(dn);
    IMat Pn = commutation_matrix(dn);
    FlipResult best;
    bool found = false;
    const int edge_orders[2][2] = {{i0, i1}, {i1, i0}};
    const int face_orders[2][2] = {{jb, ja}, {ja, jb}};
    for (auto& eo : edge_orders)
        for (auto& fo : face_orders) {
            std::vector<int> word = {eo[0], eo[1], fo[0], fo[1]};
            CompatiblePair p = s.pair;
            for (int k : word) p = mutate_pair(p, k);
            // {i0,i1} -> new faces, {ja,jb} -> new edge vertices
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    std::vector<int> perm(I.size());
                    for (int i = 0; i < I.size(); ++i) perm[i] = i;
                    perm[i0] = a ? jb : ja;
                    perm[i1] = a ? ja : jb;
                    perm[ja] = b ? i1 : i0;
                    perm[jb] = b ? i0 : i1;
                    bool bm = relabel(p.B.b2, perm) == Bn.b2;
                    bool pm = relabel(p.pi, perm) == Pn;
                    if (bm && (!found || (pm && !best.pi_match))) {
                        best.flipped = dn;
                        best.word = word;
                        best.perm = perm;
                        best.b_match = bm;
                        best.pi_match = pm;
                        found = true;
                    }
                }
        }
    if (!found) {
        best.flipped = dn;
        best.word = {i0, i1, jb, ja};
    }
    return best;
}

SignChange change_sign(const DecoratedTriangulation& d, int t) {
    SignChange r;
    r.changed = d;
    r.changed.sign[t] = -d.sign[t];
    IndexSet I = build_index_set(d);
    r.index = I.face_vertex(t);
    QuantumSeed s = surface_seed(d);
    CompatiblePair p = mutate_pair(s.pair, r.index);
    r.b_match = p.B.b2 == build_quiver(r.changed).b2;
    r.pi_match = p.pi == commutation_matrix(r.changed);
    return r;
}

FlipRoundTrip flip_round_trip(const DecoratedTriangulation& d, int edge) {
    FlipRoundTrip r;
    FlipResult f1 = flip(d, edge);
    FlipResult f2 = flip(f1.flipped, edge);
    r.forward = f1.b_match && f1.pi_match;
    r.backward = f2.b_match && f2.pi_match;
    // the edge comes back with its ends possibly swapped, the triangles possibly reordered
    IndexSet I = build_index_set(d);
    std::vector<int> align(I.size());
    for (int i = 0; i < I.size(); ++i) align[i] = i;
    auto side_set = [](const Triangle& T) {
        std::array<int, 3> a = T.side;
        std::sort(a.begin(), a.end());
        return a;
    };
    for (size_t t2 = 0; t2 < f2.flipped.tri.triangles.size(); ++t2)
        for (size_t t = 0; t < d.tri.triangles.size(); ++t)
            if (side_set(f2.flipped.tri.triangles[t2]) == side_set(d.tri.triangles[t]))
                align[I.face_vertex(int(t2))] = I.face_vertex(int(t));
    for (size_t e = 0; e < d.tri.edges.size(); ++e)
        if (f2.flipped.tri.edges[e].ends[0] != d.tri.edges[e].ends[0]) {
            align[I.edge_vertex(int(e), 0)] = I.edge_vertex(int(e), 1);
            align[I.edge_vertex(int(e), 1)] = I.edge_vertex(int(e), 0);
        }
    r.triangulation_equal = relabel(build_quiver(f2.flipped).b2, align) == build_quiver(d).b2 &&
                            relabel(commutation_matrix(f2.flipped), align) == commutation_matrix(d);
    QuantumSeed s0 = surface_seed(d);
    QuantumSeed s1 = permute_seed(mutate_word(s0, f1.word), f1.perm);
    QuantumSeed s2 = permute_seed(permute_seed(mutate_word(s1, f2.word), f2.perm), align);
    r.seed_equal = s2.pair == s0.pair && s2.frame == s0.frame;
    return r;
}

L3Report l3_check(const DecoratedTriangulation& d) {
    L3Report r;
    const int np = int(d.tri.points.size());
    IMat G = grading_matrix(d);
    ExchangeMatrix B = build_quiver(d);
    for (int i = 0; i < G.rows(); ++i) {
        long long aug = 0;
        for (int p = 0; p < np; ++p) aug += G(i, 2 * p) - G(i, 2 * p + 1);
        if (aug % 3 != 0) r.in_l3 = false;
    }
    IMat P = ensemble_map(B);
    if (!(P.transpose() * G).isZero()) r.kills_image = false;
    Cokernel c = cokernel(P);
    r.free_rank = c.free_rank;
    r.expected = 2 * np;
    r.torsion = c.torsion;
    r.rank_ok = r.free_rank == r.expected;
    // lattice spanned by the gradings has index 3 in Z^{2|M|} iff it equals L(3)
    SmithForm s = smith_normal_form(G.transpose());
    long long idx = 1;
    for (long long v : s.invariants) idx *= v;
    r.generates = s.rank == 2 * np && idx == 3;
    return r;
}

} // namespace sl3
