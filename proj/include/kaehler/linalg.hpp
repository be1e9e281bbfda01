#pragma once

#include <vector>

#include "kaehler/errors.hpp"
#include "kaehler/ring.hpp"

namespace kaehler {

/// Dense square matrix over a coefficient ring. Sizes here stay tiny (the
/// variable count m), so cofactor expansion is fine for determinants and
/// works over rings without division.
template <RingCoeff C>
class Matrix {
public:
    explicit Matrix(unsigned n) : n_(n), a_(n, std::vector<C>(n)) {}

    static Matrix identity(unsigned n) {
        Matrix m(n);
        for (unsigned i = 0; i < n; ++i) m.a_[i][i] = C::one();
        return m;
    }

    unsigned size() const { return n_; }
    C& at(unsigned i, unsigned j) { return a_[i][j]; }
    const C& at(unsigned i, unsigned j) const { return a_[i][j]; }

    friend bool operator==(const Matrix& x, const Matrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.n_ != y.n_) throw DimensionError("matrix size mismatch");
        Matrix r(x.n_);
        for (unsigned i = 0; i < x.n_; ++i)
            for (unsigned j = 0; j < x.n_; ++j) {
                C s{};
                for (unsigned k = 0; k < x.n_; ++k) s = s + x.a_[i][k] * y.a_[k][j];
                r.a_[i][j] = s;
            }
        return r;
    }

    C determinant() const {
        std::vector<unsigned> cols(n_);
        for (unsigned j = 0; j < n_; ++j) cols[j] = j;
        return det_rec(0, cols);
    }

    /// Exact inverse by Gauss-Jordan elimination. Requires a field.
    Matrix inverse() const requires FieldCoeff<C> {
        Matrix a = *this;
        Matrix r = identity(n_);
        for (unsigned col = 0; col < n_; ++col) {
            unsigned pivot = col;
            while (pivot < n_ && a.a_[pivot][col].is_zero()) ++pivot;
            if (pivot == n_) throw NotInvertibleError("singular matrix");
            std::swap(a.a_[pivot], a.a_[col]);
            std::swap(r.a_[pivot], r.a_[col]);
            C inv = a.a_[col][col].inverse();
            for (unsigned j = 0; j < n_; ++j) {
                a.a_[col][j] = a.a_[col][j] * inv;
                r.a_[col][j] = r.a_[col][j] * inv;
            }
            for (unsigned i = 0; i < n_; ++i) {
                if (i == col || a.a_[i][col].is_zero()) continue;
                C f = a.a_[i][col];
                for (unsigned j = 0; j < n_; ++j) {
                    a.a_[i][j] = a.a_[i][j] - f * a.a_[col][j];
                    r.a_[i][j] = r.a_[i][j] - f * r.a_[col][j];
                }
            }
        }
        return r;
    }

private:
    C det_rec(unsigned row, std::vector<unsigned>& cols) const {
        if (cols.empty()) return C::one();
        if (cols.size() == 1) return a_[row][cols[0]];
        C s{};
        for (unsigned k = 0; k < cols.size(); ++k) {
            if (a_[row][cols[k]].is_zero()) continue;
            unsigned col = cols[k];
            cols.erase(cols.begin() + k);
            C minor = det_rec(row + 1, cols);
            cols.insert(cols.begin() + k, col);
            C contrib = a_[row][col] * minor;
            s = (k % 2 == 0) ? s + contrib : s - contrib;
        }
        return s;
    }

    unsigned n_;
    std::vector<std::vector<C>> a_;
};

}  // namespace kaehler
