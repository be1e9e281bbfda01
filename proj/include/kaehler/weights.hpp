#pragma once

#include <vector>

#include "kaehler/errors.hpp"
#include "kaehler/ring.hpp"

namespace kaehler {

/// Nonnegative integer matrix (l_ij), i < m indexing variables and j ranging
/// over differential orders 1..n, with sum of j*l_ij equal to n. Each matrix
/// indexes one monomial prod (d^j x_i)^(l_ij) of weighted degree n.
struct WeightMatrix {
    unsigned m = 0;
    unsigned n = 0;
    std::vector<std::vector<unsigned>> entries;  // entries[i][j-1] = l_ij

    unsigned at(unsigned i, unsigned j) const { return entries[i - 1][j - 1]; }

    /// |l_i|: number of derivatives falling on variable i.
    unsigned row_sum(unsigned i) const {
        unsigned s = 0;
        for (unsigned e : entries[i - 1]) s += e;
        return s;
    }

    /// ||l||: total entry count, the order of the mixed partial.
    unsigned total() const {
        unsigned s = 0;
        for (unsigned i = 1; i <= m; ++i) s += row_sum(i);
        return s;
    }

    unsigned weighted_total() const {
        unsigned s = 0;
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 1; j <= n; ++j) s += j * entries[i][j - 1];
        return s;
    }

    /// Row sums as a multi-index (|l_1|, ..., |l_m|).
    std::vector<unsigned> row_sums() const {
        std::vector<unsigned> r(m);
        for (unsigned i = 1; i <= m; ++i) r[i - 1] = row_sum(i);
        return r;
    }

    bool operator==(const WeightMatrix& o) const {
        return m == o.m && n == o.n && entries == o.entries;
    }
};

/// All weight matrices for m variables and differential order n, each exactly
/// once. Deterministic order: highest differential order first, higher column
/// counts first, rows filled front-loaded. Equivalent to enumerating the
/// partitions of n with parts at most n, colored by m variables.
inline std::vector<WeightMatrix> enumerate_weight_matrices(unsigned m, unsigned n) {
    if (m == 0 || n == 0) throw ValidationError("weight matrices need m, n >= 1");
    std::vector<WeightMatrix> out;
    WeightMatrix cur;
    cur.m = m;
    cur.n = n;
    cur.entries.assign(m, std::vector<unsigned>(n, 0));

    // Distributes `count` entries into column j (descending lead row), then
    // moves to the next lower order.
    auto fill_rows = [&](auto&& self, auto&& next_order, unsigned j, unsigned row,
                         unsigned count, unsigned rem) -> void {
        if (row + 1 == m) {
            cur.entries[row][j - 1] = count;
            next_order(next_order, j - 1, rem);
            cur.entries[row][j - 1] = 0;
            return;
        }
        for (unsigned k = count + 1; k-- > 0;) {
            cur.entries[row][j - 1] = k;
            self(self, next_order, j, row + 1, count - k, rem);
        }
        cur.entries[row][j - 1] = 0;
    };

    auto per_order = [&](auto&& self, unsigned j, unsigned rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (j == 0) return;
        for (unsigned count = rem / j + 1; count-- > 0;)
            fill_rows(fill_rows, self, j, 0, count, rem - j * count);
    };

    per_order(per_order, n, n);
    return out;
}

/// Integer prefactor (prod_i |l_i|!) / (prod_ij l_ij!) of the coefficient
/// formula for the induced polynomial automorphism.
inline Integer multinomial_weight(const WeightMatrix& l) {
    return multinomial_weight(l.entries);
}

/// Rational prefactor 1 / (prod_ij l_ij!) of the higher differential formula.
inline Rational differential_prefactor(const WeightMatrix& l) {
    Rational denom(1);
    for (const auto& row : l.entries)
        for (unsigned e : row) denom *= factorial(e);
    return denom.inverse();
}

}  // namespace kaehler
