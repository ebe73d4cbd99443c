#include "chios/vector_config.hpp"

#include "chios/errors.hpp"

#include <algorithm>

namespace chios {

int VectorConfig::rank_of(const ElemSet& s) const {
    if (s.empty()) return 0;
    std::vector<RatVec> cols;
    cols.reserve(s.size());
    for (int i : s) cols.push_back(vector(i));
    return matrix_rank(RatMatrix::from_columns(cols));
}

bool VectorConfig::affine_normalized() const {
    for (const auto& v : vectors)
        if (v.empty() || v.back() != 1) return false;
    return true;
}

Matroid circuits_from_vectors(const VectorConfig& v) {
    int n = v.size();
    ElemSet all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i + 1;
    int full_rank = v.rank_of(all);
    std::vector<ElemSet> circuits;
    // supports in increasing size; a support with no smaller circuit
    // inside and deficient rank is itself minimal dependent
    for (int k = 1; k <= std::min(n, full_rank + 1); ++k) {
        for_each_subset(n, k, [&](const ElemSet& s) {
            for (const auto& c : circuits)
                if (is_subset(c, s)) return;
            if (v.rank_of(s) < k) circuits.push_back(s);
        });
    }
    return Matroid::from_circuits(n, std::move(circuits));
}

ElemSet lex_least_basis_of_flat(const Matroid& m, const ElemSet& f) {
    ElemSet basis;
    for (int e : f) {
        basis.push_back(e);
        if (!m.is_independent(basis)) basis.pop_back();
    }
    return basis;
}

RatVec coordinates_in_basis(const std::vector<RatVec>& basis, const RatVec& v) {
    auto x = solve_unique(RatMatrix::from_columns(basis), v);
    if (!x)
        fail(ErrorKind::ValidationError, "vector is not uniquely expressible in the given basis");
    return *x;
}

FlatBasisAssignment FlatBasisAssignment::lex_default() { return FlatBasisAssignment(); }

FlatBasisAssignment FlatBasisAssignment::from_table(std::map<ElemSet, std::vector<RatVec>> table) {
    FlatBasisAssignment a;
    a.lex_ = false;
    a.table_ = std::move(table);
    return a;
}

std::vector<RatVec> FlatBasisAssignment::basis_for(const VectorConfig& v, const Matroid& m,
                                                   const ElemSet& flat) const {
    if (!m.is_flat(flat))
        fail(ErrorKind::NotAFlat, set_str(flat) + " is not a flat");
    if (lex_) {
        std::vector<RatVec> basis;
        for (int e : lex_least_basis_of_flat(m, flat)) basis.push_back(v.vector(e));
        return basis;
    }
    auto it = table_.find(flat);
    if (it == table_.end())
        fail(ErrorKind::ValidationError, "no basis supplied for flat " + set_str(flat));
    const auto& basis = it->second;
    int r = m.rank(flat);
    if (static_cast<int>(basis.size()) != r)
        fail(ErrorKind::ValidationError,
             "basis for flat " + set_str(flat) + " has size " + std::to_string(basis.size()) +
                 ", expected rank " + std::to_string(r));
    for (const auto& b : basis)
        if (static_cast<int>(b.size()) != v.d)
            fail(ErrorKind::ValidationError, "basis vector dimension mismatch for flat " + set_str(flat));
    if (matrix_rank(RatMatrix::from_columns(basis)) != r)
        fail(ErrorKind::ValidationError, "supplied basis for flat " + set_str(flat) + " is dependent");
    // each member must lie in the span of the flat's own vectors
    std::vector<RatVec> flat_vectors;
    for (int e : flat) flat_vectors.push_back(v.vector(e));
    RatMatrix span = RatMatrix::from_columns(flat_vectors);
    int span_rank = matrix_rank(span);
    if (span_rank != r)
        fail(ErrorKind::ValidationError, "flat rank disagrees with vector span");
    for (const auto& b : basis) {
        std::vector<RatVec> extended = flat_vectors;
        extended.push_back(b);
        if (matrix_rank(RatMatrix::from_columns(extended)) != span_rank)
            fail(ErrorKind::ValidationError,
                 "basis vector for flat " + set_str(flat) + " lies outside the flat's span");
    }
    return basis;
}

} // namespace chios
