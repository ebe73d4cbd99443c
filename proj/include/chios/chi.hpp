#ifndef CHIOS_CHI_HPP
#define CHIOS_CHI_HPP

#include "chios/matroid.hpp"
#include "chios/rational.hpp"
#include "chios/sets.hpp"
#include "chios/vector_config.hpp"

#include <functional>
#include <map>

namespace chios {

/// Evaluation of χ on ordered subsets of the ground set. Values are
/// exact rationals, zero exactly on dependent sets, and antisymmetric:
/// χ(X^σ) = sgn(σ)·χ(X). Evaluators are stateless and safe to share
/// across threads.
class ChiMap {
public:
    enum class Kind { OS, OT, Cordovil, Custom };

    ChiMap() = default;
    ChiMap(Kind kind, int ground_size, std::function<Rational(const Word&)> eval)
        : kind_(kind), n_(ground_size), eval_(std::move(eval)) {}

    Kind kind() const { return kind_; }
    int ground_size() const { return n_; }

    Rational operator()(const Word& w) const { return eval_(w); }

private:
    Kind kind_ = Kind::Custom;
    int n_ = 0;
    std::function<Rational(const Word&)> eval_;
};

/// χ(I^σ) = sgn(σ) on independent sets, 0 on dependent ones. Pairs with
/// the exterior algebra (β = -1) to give the Orlik-Solomon algebra.
ChiMap chi_os(const Matroid& m);

/// χ(I) = det of the coordinate matrix of (v_i : i in I) expressed in
/// the basis assigned to cl(I). Pairs with the square-free commutative
/// algebra (β = +1) to give the Orlik-Solomon-Terao algebra.
ChiMap chi_ot(const VectorConfig& v, const Matroid& m, const FlatBasisAssignment& b);

/// χ(I) = sign of the Orlik-Solomon-Terao determinant, so values in
/// {-1,0,+1}; the per-flat signature is fixed by the basis assignment.
ChiMap chi_cordovil(const VectorConfig& v, const Matroid& m, const FlatBasisAssignment& b);

/// χ from an explicit table on canonical independent sets, extended to
/// words by antisymmetry. Validates (2.2.1): nonzero exactly on the
/// independent sets of m, all of which must be listed.
ChiMap chi_custom(const Matroid& m, const std::map<ElemSet, Rational>& values);

const char* chi_kind_name(ChiMap::Kind kind);

} // namespace chios

#endif
