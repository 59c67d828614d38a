#pragma once

#include "sl3/webexpand.hpp"

#include <string>
#include <vector>

namespace sl3 {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::string> discrepancies;  // table rows that differ, both sides serialized
    bool ok() const;
};

// triangle | quadrilateral | grading | flip | bangle-oracle
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name);

// p*-cokernel coordinates carried to endpoint gradings: L * proj = G^T
struct GradingTransport {
    bool exists = false;
    IMat L;
    IMat proj;
    IMat end_map;
    IVec transported(const ExpVec& a) const;
};
GradingTransport grading_transport(const DecoratedTriangulation& d);

// both exchange terms of every unfrozen direction homogeneous, over all seeds within depth (< 0: all)
bool exchange_homogeneous(const QuantumSeed& root, const IMat& proj, int depth, std::string* where = nullptr);

} // namespace sl3
