#include "sl3/cluster.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace sl3 {

namespace {

long long pos(long long x) { return x > 0 ? x : 0; }

void require_unfrozen(const ExchangeMatrix& B, int k) {
    if (k < 0 || k >= B.n()) throw std::out_of_range("mutation index out of range");
    if (B.frozen[k]) throw std::invalid_argument("mutation at frozen index " + std::to_string(k));
}

} // namespace

ExchangeMatrix mutate_matrix(const ExchangeMatrix& B, int k) {
    require_unfrozen(B, k);
    const int n = B.n();
    ExchangeMatrix R = B;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k) {
                R.b2(i, j) = -B.b2(i, j);
                continue;
            }
            long long a = B.b2(i, k), b = B.b2(k, j);
            R.b2(i, j) = B.b2(i, j) + (pos(a) * pos(b) - pos(-a) * pos(-b)) / 2;
        }
    return R;
}

// E e_j = e_j (j != k), E e_k = -e_k + sum_i [-eps b_ik]_+ e_i
IMat mutation_E(const ExchangeMatrix& B, int k, int eps) {
    const int n = B.n();
    IMat E = IMat::Identity(n, n);
    for (int i = 0; i < n; ++i) E(i, k) = pos(-eps * B.b2(i, k) / 2);
    E(k, k) = -1;
    return E;
}

IMat mutation_F(const ExchangeMatrix& B, int k, int eps) {
    const int n = B.n();
    IMat F = IMat::Identity(n, n);
    for (int j = 0; j < n; ++j) F(k, j) = pos(eps * B.b2(k, j) / 2);
    F(k, k) = -1;
    return F;
}

CompatiblePair mutate_pair(const CompatiblePair& p, int k, int eps) {
    require_unfrozen(p.B, k);
    IMat E = mutation_E(p.B, k, eps), F = mutation_F(p.B, k, eps);
    CompatiblePair r;
    r.B.frozen = p.B.frozen;
    r.B.b2 = E * p.B.b2 * F;
    r.pi = E.transpose() * p.pi * E;
    return r;
}

CompatibilityReport verify_compatibility(const CompatiblePair& p) {
    CompatibilityReport r;
    const int n = p.B.n();
    // sum_i b_ik pi_ij, doubled
    IMat M = p.B.b2.transpose() * p.pi;
    r.ok = true;
    for (int k = 0; k < n; ++k) {
        if (p.B.frozen[k]) continue;
        for (int j = 0; j < n; ++j) {
            long long v = M(k, j);
            if (j == k) {
                if (v % 2 != 0 || v <= 0) {
                    r.ok = false;
                    r.violations.push_back("diagonal " + std::to_string(k) + " = " + std::to_string(v) + "/2");
                }
                r.diagonal.push_back(v / 2);
            } else if (v != 0) {
                r.ok = false;
                r.violations.push_back("entry (" + std::to_string(k) + "," + std::to_string(j) + ") = " +
                                       std::to_string(v) + "/2");
            }
        }
    }
    return r;
}

QuantumSeed initial_seed(const std::vector<std::string>& labels, const ExchangeMatrix& B, const IMat& pi) {
    QuantumSeed s;
    s.labels = labels;
    s.pair.B = B;
    s.pair.pi = pi;
    FormPtr f = make_form(pi);
    for (int i = 0; i < B.n(); ++i) s.frame.push_back(TorusElement::basis(f, i));
    return s;
}

TorusElement frame_monomial(const QuantumSeed& s, const ExpVec& v) {
    const int n = s.n();
    long long corr = 0;
    for (int l = 0; l < n; ++l)
        for (int m = l + 1; m < n; ++m) corr += (long long)v[l] * v[m] * s.pair.pi(l, m);
    TorusElement r = TorusElement::unit(s.root());
    for (int l = 0; l < n; ++l)
        for (int t = 0; t < v[l]; ++t) r = r * s.frame[l];
    return r.shifted(int(-corr));
}

std::pair<TorusElement, TorusElement> exchange_terms(const QuantumSeed& s, int k) {
    const int n = s.n();
    ExpVec v1(n, 0), v2(n, 0), fk(n, 0);
    fk[k] = 1;
    for (int i = 0; i < n; ++i) {
        long long b = s.pair.B.b2(i, k) / 2;
        v1[i] = int(pos(b));
        v2[i] = int(pos(-b));
    }
    SkewForm local;
    local.pi = s.pair.pi;
    TorusElement t1 = frame_monomial(s, v1).shifted(int(local(fk, v1)));
    TorusElement t2 = frame_monomial(s, v2).shifted(int(local(fk, v2)));
    return {t1, t2};
}

bool check_frame_commutation(const QuantumSeed& s) {
    const int n = s.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s.frame[i] * s.frame[j] != (s.frame[j] * s.frame[i]).shifted(int(2 * s.pair.pi(i, j)))) return false;
    return true;
}

QuantumSeed mutate_seed(const QuantumSeed& s, int k) {
    require_unfrozen(s.pair.B, k);
    auto [t1, t2] = exchange_terms(s, k);
    TorusElement ak = exact_left_divide(t1 + t2, s.frame[k]);
    QuantumSeed r = s;
    r.pair = mutate_pair(s.pair, k, +1);
    r.frame[k] = ak;
    for (int j = 0; j < r.n(); ++j) {
        if (j == k) continue;
        if (r.frame[k] * r.frame[j] != (r.frame[j] * r.frame[k]).shifted(int(2 * r.pair.pi(k, j))))
            throw std::logic_error("q-commutation failure after mutation at " + std::to_string(k));
    }
    return r;
}

QuantumSeed mutate_word(QuantumSeed s, const std::vector<int>& word) {
    for (int k : word) s = mutate_seed(s, k);
    return s;
}

QuantumSeed permute_seed(const QuantumSeed& s, const std::vector<int>& perm) {
    QuantumSeed r = s;
    const int n = s.n();
    for (int i = 0; i < n; ++i) {
        r.labels[perm[i]] = s.labels[i];
        r.pair.B.frozen[perm[i]] = s.pair.B.frozen[i];
        r.frame[perm[i]] = s.frame[i];
        for (int j = 0; j < n; ++j) {
            r.pair.B.b2(perm[i], perm[j]) = s.pair.B.b2(i, j);
            r.pair.pi(perm[i], perm[j]) = s.pair.pi(i, j);
        }
    }
    return r;
}

std::string cluster_key(const QuantumSeed& s) {
    std::vector<std::string> parts;
    parts.reserve(s.frame.size());
    for (auto& x : s.frame) parts.push_back(x.json());
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (auto& p : parts) {
        key += p;
        key += ';';
    }
    return key;
}

Enumeration enumerate(const QuantumSeed& root, int max_clusters, int threads) {
    if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::map<std::string, ClusterRecord> seen;
    std::vector<std::string> frontier;
    {
        ClusterRecord r{cluster_key(root), root, {}};
        frontier.push_back(r.key);
        seen.emplace(r.key, std::move(r));
    }
    if (int(seen.size()) > max_clusters) throw BoundExceeded("cluster bound exceeded");
    std::vector<int> unfrozen;
    for (int k = 0; k < root.n(); ++k)
        if (!root.frozen()[k]) unfrozen.push_back(k);

    while (!frontier.empty()) {
        // jobs in canonical order: (frontier key, k)
        struct Job {
            const ClusterRecord* parent;
            int k;
            std::optional<ClusterRecord> out;
        };
        std::vector<Job> jobs;
        for (auto& key : frontier)
            for (int k : unfrozen) jobs.push_back({&seen.at(key), k, std::nullopt});
        std::atomic<size_t> next{0};
        std::exception_ptr err;
        std::mutex err_m;
        auto worker = [&] {
            for (;;) {
                size_t i = next++;
                if (i >= jobs.size()) return;
                try {
                    auto& j = jobs[i];
                    QuantumSeed s = mutate_seed(j.parent->seed, j.k);
                    std::vector<int> w = j.parent->word;
                    w.push_back(j.k);
                    j.out = ClusterRecord{cluster_key(s), std::move(s), std::move(w)};
                } catch (...) {
                    std::lock_guard<std::mutex> g(err_m);
                    if (!err) err = std::current_exception();
                }
            }
        };
        int nt = std::min<int>(threads, int(jobs.size()));
        std::vector<std::thread> pool;
        for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        if (err) std::rethrow_exception(err);

        std::vector<std::string> next_frontier;
        for (auto& j : jobs) {
            if (seen.count(j.out->key)) continue;
            next_frontier.push_back(j.out->key);
            std::string key = j.out->key;
            seen.emplace(key, std::move(*j.out));
            if (int(seen.size()) > max_clusters)
                throw BoundExceeded("more than " + std::to_string(max_clusters) + " clusters");
        }
        std::sort(next_frontier.begin(), next_frontier.end());
        frontier = std::move(next_frontier);
    }

    Enumeration e;
    std::map<std::string, std::pair<TorusElement, bool>> vars;
    for (auto& [key, rec] : seen) {
        for (int i = 0; i < rec.seed.n(); ++i) vars.emplace(rec.seed.frame[i].json(), std::make_pair(rec.seed.frame[i], bool(rec.seed.frozen()[i])));
        e.clusters.push_back(rec);
    }
    for (auto& [s, v] : vars) {
        e.variables.push_back(v.first);
        e.variable_frozen.push_back(v.second);
    }
    return e;
}

std::string Enumeration::report() const {
    std::ostringstream os;
    os << "clusters " << clusters.size() << "\n";
    for (auto& c : clusters) {
        os << "cluster word=";
        for (size_t i = 0; i < c.word.size(); ++i) os << (i ? "," : "") << c.word[i];
        os << " key=" << c.key << "\n";
    }
    os << "variables " << variables.size() << "\n";
    for (size_t i = 0; i < variables.size(); ++i)
        os << (variable_frozen[i] ? "frozen " : "mutable ") << variables[i].json() << "\n";
    return os.str();
}

IMat ensemble_map(const ExchangeMatrix& B) {
    const int n = B.n();
    std::vector<int> uf;
    for (int i = 0; i < n; ++i)
        if (!B.frozen[i]) uf.push_back(i);
    IMat P(n, uf.size());
    for (size_t c = 0; c < uf.size(); ++c)
        for (int j = 0; j < n; ++j) P(j, c) = B.b2(j, uf[c]) / 2;
    return P;
}

EnsembleProjection ensemble_projection(const ExchangeMatrix& B) {
    EnsembleProjection e;
    e.coker = cokernel(ensemble_map(B));
    e.m = e.coker.free_rank;
    e.proj = e.coker.free_proj;
    return e;
}

BarReport bar_check(const QuantumSeed& s) {
    BarReport r;
    for (int i = 0; i < s.n(); ++i)
        if (!s.frame[i].is_bar_invariant()) {
            r.ok = false;
            r.failures.push_back(i);
        }
    return r;
}

std::string matrix_json(const IMat& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "," : "") << "[";
        for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

} // namespace sl3
