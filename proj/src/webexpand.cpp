#include "sl3/webexpand.hpp"

#include "sl3/skein.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace sl3 {

namespace {

std::vector<std::string> split(const std::string& s, char c) {
    std::vector<std::string> r;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, c)) r.push_back(cur);
    return r;
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\n");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\n");
    return s.substr(a, b - a + 1);
}

int side_of(const Triangle& T, int edge) {
    int found = -1;
    for (int i = 0; i < 3; ++i)
        if (T.side[i] == edge) {
            if (found >= 0) throw InputError("edge appears twice on triangle " + T.name);
            found = i;
        }
    return found;
}

// +1 if the end 0 of the crossed edge lies on the left of the strand
int crossing_sign(const Triangle& T, int side_out) { return T.first_end(side_out) == 1 ? +1 : -1; }

// M^{-J} y M^{J}
TorusElement conjugate(const TorusElement& y, const ExpVec& J) {
    TorusElement r(y.form());
    for (auto& [a, c] : y.terms()) r.add_term(a, c.shifted(int(2 * (*y.form())(a, J))));
    return r;
}

} // namespace

std::string LoopDescriptor::str(const Triangulation& t) const {
    std::string s;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i) s += ",";
        s += t.triangles[steps[i].triangle].name + ":" + t.edges[steps[i].edge_in].name + ":" +
             t.edges[steps[i].edge_out].name;
    }
    return s;
}

LoopDescriptor parse_loop(const Triangulation& t, const std::string& text) {
    LoopDescriptor loop;
    for (auto& part : split(text, ',')) {
        auto f = split(trim(part), ':');
        if (f.size() != 3) throw InputError("loop step '" + part + "' is not T:Ein:Eout");
        LoopStep st;
        st.triangle = t.triangle_index(trim(f[0]));
        st.edge_in = t.edge_index(trim(f[1]));
        st.edge_out = t.edge_index(trim(f[2]));
        loop.steps.push_back(st);
    }
    validate_loop(t, loop);
    return loop;
}

void validate_loop(const Triangulation& t, LoopDescriptor& loop) {
    if (loop.steps.empty()) throw InputError("empty loop");
    std::set<int> used;
    const int m = int(loop.steps.size());
    for (int i = 0; i < m; ++i) {
        LoopStep& st = loop.steps[i];
        if (st.triangle < 0 || st.triangle >= int(t.triangles.size())) throw InputError("bad triangle in loop");
        const Triangle& T = t.triangles[st.triangle];
        st.side_in = side_of(T, st.edge_in);
        st.side_out = side_of(T, st.edge_out);
        if (st.side_in < 0 || st.side_out < 0)
            throw InputError("loop step at " + T.name + " uses an edge that is not a side");
        if (st.edge_in == st.edge_out) throw InputError("loop enters and leaves " + T.name + " through one edge");
        const LoopStep& nx = loop.steps[(i + 1) % m];
        if (nx.edge_in != st.edge_out) throw InputError("consecutive loop steps do not share an edge");
        if (t.edges[st.edge_out].boundary) throw InputError("loop crosses boundary edge " + t.edges[st.edge_out].name);
        if (!used.insert(st.edge_out).second) throw InputError("loop crosses " + t.edges[st.edge_out].name + " twice");
    }
    if (m == 1) throw InputError("loop must cross at least two edges");
}

LoopDescriptor reversed_loop(const LoopDescriptor& loop) {
    LoopDescriptor r;
    for (auto it = loop.steps.rbegin(); it != loop.steps.rend(); ++it) {
        LoopStep s = *it;
        std::swap(s.edge_in, s.edge_out);
        std::swap(s.side_in, s.side_out);
        r.steps.push_back(s);
    }
    return r;
}

bool BiangleBraid::identity() const {
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != int(i)) return false;
    return true;
}

int WebOnSplit::components() const {
    // orbits of the composed braid permutation
    std::vector<int> p(strands);
    for (int i = 0; i < strands; ++i) p[i] = i;
    for (auto& b : braids)
        for (int i = 0; i < strands; ++i) p[i] = b.perm[p[i]];
    std::vector<bool> seen(strands);
    int c = 0;
    for (int i = 0; i < strands; ++i) {
        if (seen[i]) continue;
        ++c;
        for (int j = i; !seen[j]; j = p[j]) seen[j] = true;
    }
    return c;
}

WebOnSplit loop_to_web(const Triangulation& t, const LoopDescriptor& loop) {
    WebOnSplit w;
    w.loop = loop;
    validate_loop(t, w.loop);
    for (auto& s : w.loop.steps) {
        w.pieces.push_back({s.triangle, s.side_in, s.side_out, 1});
        w.braids.push_back({s.edge_out, {0}, {}});
    }
    return w;
}

WebOnSplit bangle(const WebOnSplit& w, int n) {
    if (n < 1) throw InputError("bangle needs n >= 1");
    WebOnSplit r = w;
    r.strands = n;
    for (auto& p : r.pieces) p.strands = n;
    for (auto& b : r.braids) {
        b.perm.resize(n);
        for (int i = 0; i < n; ++i) b.perm[i] = i;
        b.crossings.clear();
    }
    return r;
}

WebOnSplit bracelet(const WebOnSplit& w, int n, int at) {
    WebOnSplit r = bangle(w, n);
    if (at < 0 || at >= int(r.braids.size())) throw InputError("bracelet biangle out of range");
    auto& b = r.braids[at];
    // top strand drops to the bottom, passing over the others
    for (int i = 0; i < n; ++i) b.perm[i] = (i + 1) % n;
    for (int i = 0; i + 1 < n; ++i) b.crossings.push_back({n - 1, i});
    return r;
}

Expander::Expander(const DecoratedTriangulation& d) : d_(d) {
    idx_ = build_index_set(d);
    seed_ = surface_seed(d);
    end_map_ = grading_matrix(d);
    const int nt = int(d.tri.triangles.size());
    for (int t = 0; t < nt; ++t) {
        const int f = idx_.face_vertex(t);
        TorusElement own = TorusElement::basis(seed_.root(), f);
        TorusElement other = mutate_seed(seed_, f).frame[f];
        t_plus_.push_back(d.sign[t] > 0 ? own : other);
        t_minus_.push_back(d.sign[t] > 0 ? other : own);
    }
}

const TorusElement& Expander::triad(int t, int sign) const { return sign > 0 ? t_plus_[t] : t_minus_[t]; }

TorusElement Expander::edge_arc(int e, int end) const {
    return TorusElement::basis(seed_.root(), idx_.edge_vertex(e, end));
}

// arc along side i of t ending at corner j (j = i or i+1)
TorusElement Expander::arc(int t, int side, int terminal_corner) const {
    const Triangle& T = d_.tri.triangles[t];
    int end = (terminal_corner % 3 == side) ? T.first_end(side) : 1 - T.first_end(side);
    return edge_arc(T.side[side], end);
}

namespace {

// piece of one strand in a triangle: entry cut type, exit cut type
struct PieceResult {
    bool zero = false;
    std::vector<std::pair<int, int>> arcs;  // (side, terminal corner)
    int triad = 0;
};

PieceResult triangle_piece(int a, int b, int ein, int eout) {
    PieceResult r;
    auto c = [&](int k) { return ((a + k) % 3 + 3) % 3; };
    if (b == c(2)) {
        // corner v = c_a on the left; x = c_{a+1}, y = c_{a+2}
        const int v = c(0), x = c(1), y = c(2);
        (void)x;
        if (ein == +1 && eout == +1) r.arcs = {{c(0), v}};        // e_xv
        else if (ein == +1 && eout == -1) r.arcs = {{c(1), y}};   // e_xy
        else if (ein == +1 && eout == 0) r.triad = +1;
        else if (ein == -1 && eout == -1) r.arcs = {{c(2), y}};   // e_vy
        else if (ein == 0 && eout == -1) r.triad = -1;
        else if (ein == 0 && eout == 0) r.arcs = {{c(0), c(1)}, {c(2), v}};  // e_vx e_yv
        else r.zero = true;
    } else {
        // corner v = c_{a+1} on the right; x = c_a, y = c_{a+2}
        const int v = c(1), y = c(2);
        if (ein == +1 && eout == +1) r.arcs = {{c(1), y}};        // e_vy
        else if (ein == -1 && eout == +1) r.arcs = {{c(2), y}};   // e_xy
        else if (ein == -1 && eout == -1) r.arcs = {{c(0), v}};   // e_xv
        else if (ein == -1 && eout == 0) r.triad = +1;
        else if (ein == 0 && eout == +1) r.triad = -1;
        else if (ein == 0 && eout == 0) r.arcs = {{c(0), c(0)}, {c(1), v}};  // e_vx e_yv
        else r.zero = true;
    }
    return r;
}

} // namespace

struct CutExpansion {
    TorusElement numerator;
    ExpVec J;
};

static CutExpansion cut_expand(const Expander& ex, const DecoratedTriangulation& d, const IndexSet& I,
                               const LoopDescriptor& loop,
                               const std::function<TorusElement(int, int, int)>& arc,
                               const std::function<TorusElement(int, int)>& edge_arc) {
    const auto& tri = d.tri;
    const int m = int(loop.steps.size());
    const FormPtr& root = ex.seed().root();
    CutExpansion r{TorusElement(root), ExpVec(I.size(), 0)};
    // crossing i: leave steps[i] through side_out, enter steps[i+1]
    struct Crossing {
        int edge, end_A, end_B;
    };
    std::vector<Crossing> cr(m);
    for (int i = 0; i < m; ++i) {
        const LoopStep& s = loop.steps[i];
        const Triangle& T = tri.triangles[s.triangle];
        int endB = T.first_end(s.side_out);
        cr[i] = {s.edge_out, 1 - endB, endB};
        r.J[I.edge_vertex(s.edge_out, 0)] += 2;
        r.J[I.edge_vertex(s.edge_out, 1)] += 2;
    }
    std::vector<int> eps(m, -1);
    for (;;) {
        std::vector<TorusElement> comps;
        bool zero = false;
        int shift = 0;
        for (int i = 0; i < m && !zero; ++i) {
            const LoopStep& s = loop.steps[i];
            PieceResult p = triangle_piece(s.side_in, s.side_out, eps[(i + m - 1) % m], eps[i]);
            if (p.zero) {
                zero = true;
                break;
            }
            for (auto& [side, corner] : p.arcs) comps.push_back(arc(s.triangle, side, corner));
            if (p.triad) comps.push_back(ex.triad(s.triangle, p.triad));
            const Crossing& c = cr[i];
            TorusElement eAB = edge_arc(c.edge, c.end_B), eBA = edge_arc(c.edge, c.end_A);
            // two cut arcs and the biangle piece
            if (eps[i] == +1) comps.insert(comps.end(), {eAB, eAB, eBA});
            else if (eps[i] == -1) comps.insert(comps.end(), {eBA, eBA, eAB});
            else comps.insert(comps.end(), {eAB, eBA});
            shift += 12 * eps[i];
        }
        if (!zero) r.numerator += weyl_order(comps).shifted(shift);
        int k = 0;
        while (k < m && eps[k] == +1) eps[k++] = -1;
        if (k == m) break;
        ++eps[k];
    }
    return r;
}

TorusElement Expander::expand_loop(const LoopDescriptor& given) const {
    LoopDescriptor loop = given;
    validate_loop(d_.tri, loop);
    auto arcf = [this](int t, int s, int c) { return arc(t, s, c); };
    auto earc = [this](int e, int end) { return edge_arc(e, end); };
    CutExpansion c = cut_expand(*this, d_, idx_, loop, arcf, earc);
    return c.numerator * TorusElement::monomial(seed_.root(), c.J).inverse();
}

ExpansionResult Expander::finish(const TorusElement& x, const ExpVec& J) const {
    ExpansionResult r;
    r.labels = seed_.labels;
    r.x = x;
    r.J = J;
    r.J_total = J;
    // clear t^{-s(T)} and any leftover denominators
    for (int i = 0; i < idx_.size(); ++i) {
        int lo = 0;
        for (auto& [a, c] : x.terms()) lo = std::min(lo, a[i]);
        r.J_total[i] = std::max(r.J_total[i], -lo);
    }
    r.numerator = x * TorusElement::monomial(seed_.root(), r.J_total);
    r.positive = !x.is_zero() && x.is_positive();
    r.bar_invariant = x.is_bar_invariant();
    r.grading = endpoint_class(x, end_map_, &r.homogeneous);
    r.grading_zero = r.homogeneous && r.grading.isZero();
    return r;
}

std::vector<BraceletTerm> bracelet_formula(int n) {
    if (n < 1) throw InputError("bracelet needs n >= 1");
    using Poly = std::map<std::pair<int, int>, long long>;  // gamma^a gamma*^b
    auto e = [](int k) -> Poly {
        if (k == 0 || k == 3) return {{{0, 0}, 1}};
        if (k == 1) return {{{1, 0}, 1}};
        if (k == 2) return {{{0, 1}, 1}};
        return {};
    };
    auto pmul = [](const Poly& x, const Poly& y) {
        Poly r;
        for (auto& [a, c] : x)
            for (auto& [b, d] : y) r[{a.first + b.first, a.second + b.second}] += c * d;
        return r;
    };
    auto padd = [](Poly& x, const Poly& y, long long s) {
        for (auto& [a, c] : y) x[a] += s * c;
    };
    // dual Jacobi-Trudi: s_lambda = det(e_{mu_i - i + j}), mu = conjugate of lambda
    std::function<Poly(const std::vector<int>&)> schur = [&](const std::vector<int>& mu) {
        const int k = int(mu.size());
        std::vector<std::vector<Poly>> m(k, std::vector<Poly>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = e(mu[i] - i + j);
        std::function<Poly(std::vector<int>, int)> det = [&](std::vector<int> cols, int row) -> Poly {
            if (row == k) return {{{0, 0}, 1}};
            Poly r;
            for (size_t c = 0; c < cols.size(); ++c) {
                auto rest = cols;
                rest.erase(rest.begin() + c);
                padd(r, pmul(m[row][cols[c]], det(rest, row + 1)), (c % 2) ? -1 : 1);
            }
            return r;
        };
        std::vector<int> cols(k);
        for (int i = 0; i < k; ++i) cols[i] = i;
        return det(cols, 0);
    };
    std::map<std::pair<int, int>, QLaurent> acc;
    for (int k = 0; k < n && k <= 2; ++k) {
        // hook (n-k, 1^k), conjugate (k+1, 1^{n-k-1})
        std::vector<int> mu(n - k, 1);
        mu[0] = k + 1;
        Poly s = schur(mu);
        QLaurent c = QLaurent::monomial(2 * (2 * (n - 1) - 6 * k)) * QLaurent(k % 2 ? -1 : 1);
        for (auto& [ab, v] : s)
            if (v) acc[ab] = acc[ab] + c * QLaurent(v);
    }
    std::vector<BraceletTerm> r;
    for (auto& [ab, c] : acc)
        if (!c.is_zero()) r.push_back({ab.first, ab.second, c});
    return r;
}

ExpansionResult Expander::expand(const WebOnSplit& w) const {
    LoopDescriptor loop = w.loop;
    validate_loop(d_.tri, loop);
    auto arcf = [this](int t, int s, int c) { return arc(t, s, c); };
    auto earc = [this](int e, int end) { return edge_arc(e, end); };
    bool identity = true;
    for (auto& b : w.braids) identity = identity && b.identity();
    if (identity) {
        // components in increasing elevation; each new one goes on top
        CutExpansion c = cut_expand(*this, d_, idx_, loop, arcf, earc);
        TorusElement N = c.numerator;
        ExpVec J = c.J;
        for (int k = 1; k < w.strands; ++k) {
            CutExpansion ck = cut_expand(*this, d_, idx_, loop, arcf, earc);
            // N_k M^{-J_k} N M^{-J} = N_k (M^{-J_k} N M^{J_k}) M^{-(J_k+J)}
            N = ck.numerator * conjugate(N, ck.J);
            J = add(J, ck.J);
        }
        return finish(N * TorusElement::monomial(seed_.root(), J).inverse(), J);
    }
    // one cyclic braid: closure through the hook expansion in gamma, gamma*
    CutExpansion c = cut_expand(*this, d_, idx_, loop, arcf, earc);
    CutExpansion cs = cut_expand(*this, d_, idx_, reversed_loop(loop), arcf, earc);
    TorusElement g = c.numerator * TorusElement::monomial(seed_.root(), c.J).inverse();
    TorusElement gs = cs.numerator * TorusElement::monomial(seed_.root(), cs.J).inverse();
    TorusElement x(seed_.root());
    for (auto& t : bracelet_formula(w.strands)) x += (g.pow(t.a) * gs.pow(t.b)).scaled(t.c);
    ExpVec J(idx_.size(), 0);
    for (int k = 0; k < w.strands; ++k) J = add(J, c.J);
    return finish(x, J);
}

ExpansionResult expand(const WebOnSplit& w, const DecoratedTriangulation& d) { return Expander(d).expand(w); }

std::string ExpansionResult::json() const {
    auto vec = [&](const ExpVec& v) {
        std::string s = "{";
        bool first = true;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i]) {
                s += std::string(first ? "" : ", ") + "\"" + labels[i] + "\": " + std::to_string(v[i]);
                first = false;
            }
        return s + "}";
    };
    std::ostringstream o;
    o << "{\"J\": " << vec(J) << ", \"J_total\": " << vec(J_total) << ", \"numerator\": " << numerator.json()
      << ", \"normalized\": " << x.json() << ", \"positive\": " << (positive ? "true" : "false")
      << ", \"bar_invariant\": " << (bar_invariant ? "true" : "false") << ", \"grading\": [";
    for (int i = 0; i < grading.size(); ++i) o << (i ? ", " : "") << grading[i];
    o << "], \"grading_zero\": " << (grading_zero ? "true" : "false") << "}";
    return o.str();
}

OracleReport oracle_bangle_power(const DecoratedTriangulation& d, const LoopDescriptor& loop, int n) {
    OracleReport r;
    r.name = "bangle-power n=" + std::to_string(n);
    Expander ex(d);
    WebOnSplit w = loop_to_web(d.tri, loop);
    TorusElement g = ex.expand(w).x;
    ExpansionResult b = ex.expand(bangle(w, n));
    TorusElement p = g.pow(n);
    r.pass = (p == b.x);
    r.detail = r.pass ? "expand(bangle) = expand(loop)^n" : "mismatch: " + b.x.str() + " vs " + p.str();
    return r;
}

LoopDescriptor retrace_loop(const Triangulation& t, const LoopDescriptor& loop, const Triangulation& t2) {
    // signed crossings on edges present in both
    std::map<std::string, int> sig;
    for (auto& e : t.edges)
        if (!e.boundary) sig[e.name] = 0;
    for (auto& s : loop.steps) sig[t.edges[s.edge_out].name] += crossing_sign(t.triangles[s.triangle], s.side_out);
    std::map<std::string, int> want;
    for (auto& e : t2.edges)
        if (!e.boundary && sig.count(e.name)) want[e.name] = sig[e.name];
    std::vector<LoopDescriptor> found;
    const int nt = int(t2.triangles.size());
    std::vector<LoopStep> path;
    std::set<int> used;
    std::function<void(int, int, int)> dfs = [&](int start, int tri, int edge_in) {
        const Triangle& T = t2.triangles[tri];
        for (int so = 0; so < 3; ++so) {
            const int e = T.side[so];
            if (e == edge_in || t2.edges[e].boundary || used.count(e)) continue;
            LoopStep st{tri, edge_in, e, -1, so};
            // next triangle across e
            int nx = -1;
            for (int k = 0; k < nt && nx < 0; ++k)
                for (int i = 0; i < 3; ++i)
                    if (t2.triangles[k].side[i] == e && !(k == tri && i == so)) nx = k;
            if (nx < 0) continue;
            path.push_back(st);
            used.insert(e);
            if (nx == start && path.size() >= 2 && e == path.front().edge_in) {
                LoopDescriptor L;
                L.steps = path;
                std::map<std::string, int> s;
                for (auto& kv : want) s[kv.first] = 0;
                for (auto& p : L.steps) {
                    const std::string& nm = t2.edges[p.edge_out].name;
                    if (s.count(nm)) s[nm] += crossing_sign(t2.triangles[p.triangle], p.side_out);
                }
                if (s == want) found.push_back(L);
            } else if (nx != start && path.size() < size_t(t2.edges.size())) {
                dfs(start, nx, e);
            }
            path.pop_back();
            used.erase(e);
        }
    };
    for (int s = 0; s < nt; ++s) {
        const Triangle& T = t2.triangles[s];
        for (int si = 0; si < 3; ++si) {
            if (t2.edges[T.side[si]].boundary) continue;
            path.clear();
            used.clear();
            std::function<void(int, int)> go = [&](int tri, int edge_in) { dfs(s, tri, edge_in); };
            go(s, T.side[si]);
        }
        if (!found.empty()) break;
    }
    if (found.empty()) throw InputError("loop cannot be re-traced in the flipped triangulation");
    std::sort(found.begin(), found.end(), [](const LoopDescriptor& a, const LoopDescriptor& b) {
        return a.steps.size() < b.steps.size();
    });
    LoopDescriptor r = found.front();
    validate_loop(t2, r);
    return r;
}

OracleReport oracle_flip_transport(const DecoratedTriangulation& d, const LoopDescriptor& loop, int edge,
                                   int bracelet_n) {
    OracleReport r;
    r.name = "flip-transport " + d.tri.edges[edge].name + (bracelet_n > 1 ? " bracelet " + std::to_string(bracelet_n) : "");
    FlipResult f = flip(d, edge);
    if (!f.b_match || !f.pi_match) {
        r.detail = "flip does not match the 4-mutation word";
        return r;
    }
    Expander ex(d), ex2(f.flipped);
    LoopDescriptor loop2 = retrace_loop(d.tri, loop, f.flipped.tri);
    WebOnSplit w = loop_to_web(d.tri, loop), w2 = loop_to_web(f.flipped.tri, loop2);
    if (bracelet_n > 1) {
        w = bracelet(w, bracelet_n);
        w2 = bracelet(w2, bracelet_n);
    }
    ExpansionResult a = ex.expand(w), b = ex2.expand(w2);
    QuantumSeed s = mutate_word(ex.seed(), f.word);
    const int n = s.n();
    auto transport = [&](const TorusElement& y) {
        TorusElement t(s.root());
        for (auto& [al, c] : y.terms()) {
            ExpVec v(n);
            for (int i = 0; i < n; ++i) v[i] = al[f.perm[i]];
            t += frame_monomial(s, v).scaled(c);
        }
        return t;
    };
    TorusElement lhs = a.x * transport(TorusElement::monomial(b.numerator.form(), b.J_total));
    TorusElement rhs = transport(b.numerator);
    r.pass = lhs == rhs;
    r.detail = "loop in flipped triangulation: " + loop2.str(f.flipped.tri) + (r.pass ? "; equal" : "; differ");
    return r;
}

} // namespace sl3
