#ifndef CHIOS_VECTOR_CONFIG_HPP
#define CHIOS_VECTOR_CONFIG_HPP

#include "chios/linalg.hpp"
#include "chios/matroid.hpp"
#include "chios/rational.hpp"

#include <map>
#include <vector>

namespace chios {

using RatVec = std::vector<Rational>;

/// A list of n rational vectors in K^d. Zero vectors are allowed and
/// become loops of the derived matroid.
struct VectorConfig {
    int d = 0;
    std::vector<RatVec> vectors; // vectors[i-1] is v_i

    int size() const { return static_cast<int>(vectors.size()); }
    const RatVec& vector(int i) const { return vectors[static_cast<size_t>(i - 1)]; }

    /// Exact rank of the subconfiguration indexed by s.
    int rank_of(const ElemSet& s) const;

    /// True when every vector has last coordinate 1 (points in the
    /// affine plane x_d = 1).
    bool affine_normalized() const;
};

/// The matroid whose circuits are the minimal supports of rational
/// linear dependencies among the vectors. Enumerates supports by
/// increasing size, pruning supersets of circuits already found.
Matroid circuits_from_vectors(const VectorConfig& v);

/// Deterministic basis for the span of each flat: either the lex-least
/// independent subset of the flat (default), or explicitly supplied
/// vectors validated against the flat's span.
class FlatBasisAssignment {
public:
    /// Lex-least convention: the basis of flat F is (v_i : i in the
    /// first independent rank(F)-subset of F), indices increasing.
    static FlatBasisAssignment lex_default();

    /// Explicit table; each entry is validated on first use.
    static FlatBasisAssignment from_table(std::map<ElemSet, std::vector<RatVec>> table);

    /// Basis vectors for the given flat. Throws NotAFlat when f is not a
    /// flat, ValidationError when an explicit entry is missing or does
    /// not span the flat.
    std::vector<RatVec> basis_for(const VectorConfig& v, const Matroid& m, const ElemSet& flat) const;

    bool is_lex() const { return lex_; }

private:
    FlatBasisAssignment() = default;
    bool lex_ = true;
    std::map<ElemSet, std::vector<RatVec>> table_;
};

/// Lex-least independent subset of f of size rank(f) (matroid greedy).
ElemSet lex_least_basis_of_flat(const Matroid& m, const ElemSet& f);

/// Coordinates of `v` in the given basis; throws ValidationError when v
/// is outside the span or the basis is dependent.
RatVec coordinates_in_basis(const std::vector<RatVec>& basis, const RatVec& v);

} // namespace chios

#endif
