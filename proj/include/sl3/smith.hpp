#pragma once

#include "sl3/qtorus.hpp"

#include <vector>

namespace sl3 {

// U * A * V = D, U and V unimodular, D diagonal with d1 | d2 | ...
struct SmithForm {
    IMat U, V, D;
    int rank = 0;
    std::vector<long long> invariants;  // nonzero diagonal
};

SmithForm smith_normal_form(const IMat& A);

// Z^n / span(columns of P)
struct Cokernel {
    int n = 0;
    int free_rank = 0;
    std::vector<long long> torsion;  // invariant factors > 1
    IMat free_proj;                  // free_rank x n
    IMat torsion_proj;               // rows of U for torsion factors
};

Cokernel cokernel(const IMat& P);

} // namespace sl3
