#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace topo {

/// Dense integer matrix, exact entries, row-major.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, 0) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("IntMatrix: dimensions must be positive");
    }

    IntMatrix(std::size_t rows, std::size_t cols, std::vector<long long> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows == 0 || cols == 0 || e_.size() != rows * cols)
            throw std::invalid_argument("IntMatrix: bad shape");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    long long& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    long long operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<long long> e_;
};

/// Finitely generated abelian group in invariant-factor form:
/// Z/f1 + Z/f2 + ... + Z^rank with 2 <= f1 | f2 | ... .
struct AbelianGroup {
    std::vector<long long> invariant_factors;
    std::size_t free_rank = 0;

    bool trivial() const { return invariant_factors.empty() && free_rank == 0; }

    // Order of the torsion part times nothing; 0 signals infinite.
    long long order() const {
        if (free_rank > 0) return 0;
        long long o = 1;
        for (long long f : invariant_factors) o *= f;
        return o;
    }

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.invariant_factors == b.invariant_factors && a.free_rank == b.free_rank;
    }

    std::string str() const;
};

struct SnfResult {
    std::vector<long long> diagonal;  // d1 | d2 | ..., all >= 0
    AbelianGroup cokernel;            // rows are relations, columns generators
};

/// Smith normal form by deterministic Euclidean reduction (smallest-pivot
/// scan order, no randomization). The cokernel is Z^cols / rowspan(A).
SnfResult smith_normal_form(const IntMatrix& a);

}  // namespace topo
