// Test-only oracles, deliberately independent of the library's
// algorithms: rank by exhaustive subset enumeration instead of greedy
// extension, and vector rank by cofactor-expansion minors instead of
// Gaussian elimination.
#ifndef CHIOS_TESTS_ORACLES_HPP
#define CHIOS_TESTS_ORACLES_HPP

#include "chios/rational.hpp"
#include "chios/sets.hpp"
#include "chios/vector_config.hpp"

#include <algorithm>
#include <vector>

namespace chios::tests {

inline bool brute_independent(const std::vector<ElemSet>& circuits, const ElemSet& x) {
    for (const auto& c : circuits)
        if (is_subset(c, x)) return false;
    return true;
}

inline int brute_rank(const std::vector<ElemSet>& circuits, const ElemSet& x) {
    int best = 0;
    for (const auto& s : all_subsets(x))
        if (brute_independent(circuits, s)) best = std::max(best, static_cast<int>(s.size()));
    return best;
}

inline ElemSet brute_closure(int n, const std::vector<ElemSet>& circuits, const ElemSet& x) {
    int r = brute_rank(circuits, x);
    ElemSet cl;
    for (int y = 1; y <= n; ++y) {
        if (contains(x, y)) {
            cl.push_back(y);
            continue;
        }
        if (brute_rank(circuits, with_element(x, y)) == r) cl.push_back(y);
    }
    return cl;
}

// determinant by cofactor expansion along the first row
inline Rational cofactor_det(const std::vector<std::vector<Rational>>& rows) {
    size_t n = rows.size();
    if (n == 0) return 1;
    if (n == 1) return rows[0][0];
    Rational det = 0;
    for (size_t j = 0; j < n; ++j) {
        if (rows[0][j] == 0) continue;
        std::vector<std::vector<Rational>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Rational> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(rows[i][k]);
            minor.push_back(std::move(row));
        }
        Rational term = rows[0][j] * cofactor_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// rank of the vectors indexed by `support`: the largest k with a nonzero
// k-by-k minor
inline int minor_rank(const VectorConfig& v, const ElemSet& support) {
    int rows = v.d;
    int cols = static_cast<int>(support.size());
    for (int k = std::min(rows, cols); k >= 1; --k) {
        bool found = false;
        for_each_subset(cols, k, [&](const ElemSet& colpick) {
            if (found) return;
            for_each_subset(rows, k, [&](const ElemSet& rowpick) {
                if (found) return;
                std::vector<std::vector<Rational>> sub;
                for (int ri : rowpick) {
                    std::vector<Rational> row;
                    for (int ci : colpick)
                        row.push_back(v.vector(support[static_cast<size_t>(ci - 1)])[static_cast<size_t>(ri - 1)]);
                    sub.push_back(std::move(row));
                }
                if (cofactor_det(sub) != 0) found = true;
            });
        });
        if (found) return k;
    }
    return 0;
}

// minimal dependent supports straight from the definition; circuits have
// at most d+1 elements, so larger supports never matter
inline std::vector<ElemSet> brute_circuits(const VectorConfig& v) {
    int n = v.size();
    std::vector<ElemSet> dependents;
    int cap = std::min(n, v.d + 1);
    for (int k = 1; k <= cap; ++k)
        for_each_subset(n, k, [&](const ElemSet& s) {
            if (minor_rank(v, s) < static_cast<int>(s.size())) dependents.push_back(s);
        });
    std::vector<ElemSet> circuits;
    for (const auto& d : dependents) {
        bool minimal = true;
        for (const auto& other : dependents)
            if (other != d && is_subset(other, d)) {
                minimal = false;
                break;
            }
        if (minimal) circuits.push_back(d);
    }
    std::sort(circuits.begin(), circuits.end());
    return circuits;
}

} // namespace chios::tests

#endif
