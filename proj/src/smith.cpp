#include "sl3/smith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sl3 {

namespace {

void swap_rows(IMat& M, int a, int b) {
    if (a != b) M.row(a).swap(M.row(b));
}
void swap_cols(IMat& M, int a, int b) {
    if (a != b) M.col(a).swap(M.col(b));
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

SmithForm smith_normal_form(const IMat& A) {
    const int m = int(A.rows()), n = int(A.cols());
    IMat D = A;
    IMat U = IMat::Identity(m, m), V = IMat::Identity(n, n);
    int t = 0;
    while (t < m && t < n) {
        // pivot: smallest nonzero |entry| in the lower-right block
        int pr = -1, pc = -1;
        long long best = 0;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (D(i, j) != 0 && (pr < 0 || std::llabs(D(i, j)) < best)) {
                    best = std::llabs(D(i, j));
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        swap_rows(D, t, pr);
        swap_rows(U, t, pr);
        swap_cols(D, t, pc);
        swap_cols(V, t, pc);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                long long q = floor_div(D(i, t), D(t, t));
                D.row(i) -= q * D.row(t);
                U.row(i) -= q * U.row(t);
                if (D(i, t) != 0) {
                    swap_rows(D, t, i);
                    swap_rows(U, t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                long long q = floor_div(D(t, j), D(t, t));
                D.col(j) -= q * D.col(t);
                V.col(j) -= q * V.col(t);
                if (D(t, j) != 0) {
                    swap_cols(D, t, j);
                    swap_cols(V, t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility of the rest of the block
            for (int i = t + 1; i < m && clean; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        D.row(t) += D.row(i);
                        U.row(t) += U.row(i);
                        clean = false;
                        break;
                    }
        }
        if (D(t, t) < 0) {
            D.row(t) *= -1;
            U.row(t) *= -1;
        }
        ++t;
    }
    SmithForm s;
    s.U = U;
    s.V = V;
    s.D = D;
    s.rank = t;
    for (int i = 0; i < t; ++i) {
        if (D(i, i) == 0) {
            s.rank = i;
            break;
        }
        s.invariants.push_back(D(i, i));
    }
    return s;
}

Cokernel cokernel(const IMat& P) {
    Cokernel c;
    c.n = int(P.rows());
    if (P.cols() == 0) {
        c.free_rank = c.n;
        c.free_proj = IMat::Identity(c.n, c.n);
        c.torsion_proj = IMat(0, c.n);
        return c;
    }
    SmithForm s = smith_normal_form(P);
    c.free_rank = c.n - s.rank;
    c.free_proj = s.U.bottomRows(c.free_rank);
    std::vector<int> trows;
    for (int i = 0; i < s.rank; ++i)
        if (s.invariants[i] > 1) {
            c.torsion.push_back(s.invariants[i]);
            trows.push_back(i);
        }
    c.torsion_proj = IMat(trows.size(), c.n);
    for (size_t k = 0; k < trows.size(); ++k) c.torsion_proj.row(k) = s.U.row(trows[k]);
    return c;
}

} // namespace sl3
