#ifndef CHIOS_TESTS_FIXTURES_HPP
#define CHIOS_TESTS_FIXTURES_HPP

#include "chios/algebra.hpp"
#include "chios/chi.hpp"
#include "chios/matroid.hpp"
#include "chios/vector_config.hpp"

#include <vector>

namespace chios::tests {

// six points in the affine plane z = 1: (0,0), (0,1/2), (0,1), (1/2,0),
// (1,0), (1/3,1/3)
inline VectorConfig figure1_vectors() {
    VectorConfig v;
    v.d = 3;
    auto q = [](long num, long den) { return Rational(num, den); };
    v.vectors = {
        {q(0, 1), q(0, 1), q(1, 1)},
        {q(0, 1), q(1, 2), q(1, 1)},
        {q(0, 1), q(1, 1), q(1, 1)},
        {q(1, 2), q(0, 1), q(1, 1)},
        {q(1, 1), q(0, 1), q(1, 1)},
        {q(1, 3), q(1, 3), q(1, 1)},
    };
    return v;
}

inline std::vector<ElemSet> figure1_circuits() {
    return {{1, 2, 3}, {1, 4, 5}, {2, 5, 6}, {3, 4, 6}, {1, 2, 4, 6}, {1, 3, 5, 6}, {2, 3, 4, 5}};
}

inline Matroid figure1_matroid() { return Matroid::from_circuits(6, figure1_circuits()); }

inline Matroid uniform_matroid(int rank, int n) {
    std::vector<ElemSet> circuits;
    for_each_subset(n, rank + 1, [&](const ElemSet& s) { circuits.push_back(s); });
    return Matroid::from_circuits(n, std::move(circuits));
}

} // namespace chios::tests

#endif
