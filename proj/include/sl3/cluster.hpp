#pragma once

#include "sl3/qtorus.hpp"
#include "sl3/smith.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl3 {

struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// B stored doubled: b2(i,j) = 2*b_ij
struct ExchangeMatrix {
    IMat b2;
    std::vector<bool> frozen;
    int n() const { return int(b2.rows()); }
    bool operator==(const ExchangeMatrix& o) const { return b2 == o.b2 && frozen == o.frozen; }
};

struct CompatiblePair {
    ExchangeMatrix B;
    IMat pi;
    bool operator==(const CompatiblePair& o) const { return B == o.B && pi == o.pi; }
};

struct QuantumSeed {
    std::vector<std::string> labels;
    CompatiblePair pair;
    std::vector<TorusElement> frame;  // in the root torus
    int n() const { return pair.B.n(); }
    const std::vector<bool>& frozen() const { return pair.B.frozen; }
    const FormPtr& root() const { return frame.front().form(); }
};

ExchangeMatrix mutate_matrix(const ExchangeMatrix& B, int k);
// E_{k,eps} and F_{k,eps}
IMat mutation_E(const ExchangeMatrix& B, int k, int eps);
IMat mutation_F(const ExchangeMatrix& B, int k, int eps);
CompatiblePair mutate_pair(const CompatiblePair& p, int k, int eps = +1);
QuantumSeed mutate_seed(const QuantumSeed& s, int k);
QuantumSeed mutate_word(QuantumSeed s, const std::vector<int>& word);
// new index perm[i] holds old index i
QuantumSeed permute_seed(const QuantumSeed& s, const std::vector<int>& perm);

struct CompatibilityReport {
    bool ok = false;
    std::vector<long long> diagonal;  // d_k for unfrozen k
    std::vector<std::string> violations;
};
CompatibilityReport verify_compatibility(const CompatiblePair& p);

// seed whose frame is the basis of T_pi
QuantumSeed initial_seed(const std::vector<std::string>& labels, const ExchangeMatrix& B, const IMat& pi);

// X_k * A'_k, both terms, as computed in the root torus
std::pair<TorusElement, TorusElement> exchange_terms(const QuantumSeed& s, int k);
// frame monomial M(v), v >= 0
TorusElement frame_monomial(const QuantumSeed& s, const ExpVec& v);

std::string cluster_key(const QuantumSeed& s);

struct ClusterRecord {
    std::string key;
    QuantumSeed seed;
    std::vector<int> word;
};

struct Enumeration {
    std::vector<ClusterRecord> clusters;     // sorted by key
    std::vector<TorusElement> variables;     // sorted by serialization
    std::vector<bool> variable_frozen;
    std::string report() const;              // canonical text
};

Enumeration enumerate(const QuantumSeed& root, int max_clusters, int threads = 0);

struct EnsembleProjection {
    int m = 0;
    IMat proj;  // m x n, free part
    Cokernel coker;
};
// p*(e_i) = column i of B for unfrozen i
IMat ensemble_map(const ExchangeMatrix& B);
EnsembleProjection ensemble_projection(const ExchangeMatrix& B);

struct BarReport {
    bool ok = true;
    std::vector<int> failures;
};
BarReport bar_check(const QuantumSeed& s);

// frame[i]*frame[j] = q^{pi_ij} frame[j]*frame[i]
bool check_frame_commutation(const QuantumSeed& s);

std::string matrix_json(const IMat& m);

} // namespace sl3
