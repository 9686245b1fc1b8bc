#pragma once

#include <optional>
#include <vector>

#include "qdual/ratfunc.hpp"

namespace qdual {

// Dense matrix over the rational-function field.  Everything here is exact;
// pivots are chosen by a sparsity heuristic (fewest terms) to limit growth.
class Matrix {
public:
    Matrix(int rows, int cols, int nsym = 0)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, RatFunc(nsym)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RatFunc& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const RatFunc& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    // In-place reduced row echelon form; returns the pivot column of each
    // pivot row in order.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int best = -1;
            std::size_t best_sz = 0;
            for (int i = r; i < rows_; ++i) {
                const RatFunc& v = at(i, c);
                if (v.is_zero()) continue;
                std::size_t sz = v.num().term_count() + v.den().term_count();
                if (best < 0 || sz < best_sz) {
                    best = i;
                    best_sz = sz;
                }
            }
            if (best < 0) continue;
            swap_rows(best, r);
            RatFunc inv = at(r, c).inverse();
            for (int j = c; j < cols_; ++j) at(r, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                RatFunc f = at(i, c);
                for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        Matrix m = *this;
        return static_cast<int>(m.rref().size());
    }

    // Basis of the right null space, one vector per free column.  Computed
    // from the RREF, so the basis is canonical for a fixed column order.
    std::vector<std::vector<RatFunc>> kernel() const {
        Matrix m = *this;
        std::vector<int> pivots = m.rref();
        std::vector<int> pivot_of_col(cols_, -1);
        for (std::size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = static_cast<int>(i);
        int nsym = a_.empty() ? 0 : a_[0].nsym();
        std::vector<std::vector<RatFunc>> basis;
        for (int c = 0; c < cols_; ++c) {
            if (pivot_of_col[c] >= 0) continue;
            std::vector<RatFunc> v(cols_, RatFunc(nsym));
            v[c] = RatFunc::one(nsym);
            for (int pc = 0; pc < cols_; ++pc) {
                int pr = pivot_of_col[pc];
                if (pr >= 0) v[pc] = -m.at(pr, c);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Solve A x = b; nullopt when inconsistent.  When the system is
    // underdetermined the free variables are set to zero.
    std::optional<std::vector<RatFunc>> solve(const std::vector<RatFunc>& b) const {
        if (static_cast<int>(b.size()) != rows_) throw DomainError("solve: size mismatch");
        int nsym = a_.empty() ? (b.empty() ? 0 : b[0].nsym()) : a_[0].nsym();
        Matrix aug(rows_, cols_ + 1, nsym);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        std::vector<int> pivots = aug.rref();
        std::vector<RatFunc> x(cols_, RatFunc(nsym));
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (pivots[i] == cols_) return std::nullopt; // pivot in the rhs column
            x[pivots[i]] = aug.at(static_cast<int>(i), cols_);
        }
        return x;
    }

    int nsym() const { return a_.empty() ? 0 : a_[0].nsym(); }

private:
    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    int rows_, cols_;
    std::vector<RatFunc> a_;
};

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DomainError("mat_mul: shape mismatch");
    Matrix r(a.rows(), b.cols(), a.nsym());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

inline std::vector<RatFunc> mat_vec(const Matrix& a, const std::vector<RatFunc>& x) {
    if (a.cols() != static_cast<int>(x.size())) throw DomainError("mat_vec: shape mismatch");
    std::vector<RatFunc> r(a.rows(), RatFunc(a.nsym()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_zero() && !x[j].is_zero()) r[i] += a.at(i, j) * x[j];
    return r;
}

} // namespace qdual
