#include "topo/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace topo {

std::string AbelianGroup::str() const {
    if (trivial()) return "0";
    std::string s;
    for (long long f : invariant_factors) {
        if (!s.empty()) s += " + ";
        s += "Z/" + std::to_string(f);
    }
    if (free_rank > 0) {
        if (!s.empty()) s += " + ";
        s += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    }
    return s;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(i, k), m(j, k));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m(k, i), m(k, j));
}

// row[i] -= f * row[j]
void add_row(IntMatrix& m, std::size_t i, std::size_t j, long long f) {
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) -= f * m(j, k);
}

void add_col(IntMatrix& m, std::size_t i, std::size_t j, long long f) {
    for (std::size_t k = 0; k < m.rows(); ++k) m(k, i) -= f * m(k, j);
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
    IntMatrix m = a;
    const std::size_t r = m.rows(), c = m.cols();
    const std::size_t n = std::min(r, c);
    std::vector<long long> diag(n, 0);

    for (std::size_t t = 0; t < n; ++t) {
        // Smallest nonzero pivot in the trailing submatrix, first occurrence
        // in row-major scan order.
        std::size_t pi = t, pj = t;
        long long best = 0;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                long long v = std::llabs(m(i, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;  // submatrix is zero
        if (pi != t) swap_rows(m, t, pi);
        if (pj != t) swap_cols(m, t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i)
                if (m(i, t) != 0) {
                    long long q = m(i, t) / m(t, t);
                    add_row(m, i, t, q);
                    if (m(i, t) != 0) { swap_rows(m, t, i); clean = false; }
                }
            for (std::size_t j = t + 1; j < c; ++j)
                if (m(t, j) != 0) {
                    long long q = m(t, j) / m(t, t);
                    add_col(m, j, t, q);
                    if (m(t, j) != 0) { swap_cols(m, t, j); clean = false; }
                }
            if (!clean) continue;
            // Pivot must divide every remaining entry; fold a violator in.
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c && divides; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        add_row(m, t, i, -1);
                        divides = false;
                    }
            if (divides) break;
        }
        diag[t] = std::llabs(m(t, t));
    }

    SnfResult out;
    out.diagonal = diag;
    std::size_t rank = 0;
    for (long long d : diag) {
        if (d == 0) continue;
        ++rank;
        if (d > 1) out.cokernel.invariant_factors.push_back(d);
    }
    out.cokernel.free_rank = c - rank;
    return out;
}

}  // namespace topo
