#ifndef CHIOS_GROEBNER_HPP
#define CHIOS_GROEBNER_HPP

#include "chios/algebra.hpp"
#include "chios/chi.hpp"
#include "chios/matroid.hpp"
#include "chios/perm.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace chios {

/// Degree-lexicographic order on square-free monomials induced by a
/// reordering of the ground set: degree decides first, then the
/// lexicographic comparison of the supports read in the reordering.
/// Total, with e_∅ minimal, and compatible with nonzero products.
class TermOrder {
public:
    explicit TermOrder(Perm perm) : perm_(std::move(perm)) {}
    static TermOrder natural(int n) { return TermOrder(Perm::natural(n)); }

    const Perm& perm() const { return perm_; }

    std::strong_ordering compare(const ElemSet& a, const ElemSet& b) const;
    bool less(const ElemSet& a, const ElemSet& b) const { return compare(a, b) < 0; }

private:
    Perm perm_;
};

/// Leading coefficient and monomial of a nonzero element; nullopt for 0.
std::optional<std::pair<Rational, ElemSet>> leading_term(const TermOrder& order, const AlgebraElement& f);

struct GroebnerBasis {
    enum class Kind { Reduced, Universal };
    Kind kind;
    TermOrder order;
    std::vector<AlgebraElement> elements;
};

/// The reduced Groebner basis of the boundary ideal for the order:
/// normalized boundaries of the circuits whose broken circuit is
/// inclusion-minimal (one per broken circuit). Loop-free matroids only.
GroebnerBasis reduced_groebner(const Matroid& m, const ChiMap& chi, const TermOrder& order);

/// Boundaries of all circuits: a Groebner basis for every term order,
/// and minimal with that property.
GroebnerBasis universal_groebner(const Matroid& m, const ChiMap& chi);

/// A permutation whose induced order exposes the necessity of the given
/// circuit: dropping ∂e_C from the universal basis stops it being a
/// Groebner basis for this order.
Perm minimality_witness(const Matroid& m, const ElemSet& circuit);

/// The distinct leading monomials of the given elements, as generators
/// of the monomial ideal they span. Generators are listed as they come
/// from the elements, including redundant ones.
struct LeadingTermIdeal {
    std::vector<ElemSet> generators;

    bool divides_some_generator_into(const ElemSet& monomial) const;
};
LeadingTermIdeal leading_term_ideal(const TermOrder& order, const std::vector<AlgebraElement>& elements);
LeadingTermIdeal leading_term_ideal(const TermOrder& order, const GroebnerBasis& g);

/// Standard monomials of degree ℓ: those not divisible by any generator
/// of the leading-term ideal of the reduced basis. Equals the π-nbc sets.
std::vector<ElemSet> canonical_basis(const Matroid& m, const ChiMap& chi, const TermOrder& order, int ell);

/// Degreewise verification that Lt(G) = Lt(ideal): the leading monomials
/// of each degree component are computed by a row-echelon pass over the
/// degree basis with columns sorted descending, and compared against the
/// monomials containing some lp(g). Members of G must reduce to zero
/// modulo the ideal first (NotInIdeal otherwise).
bool is_groebner(const Matroid& m, const ChiMap& chi, const TermOrder& order,
                 const std::vector<AlgebraElement>& g);

/// Leading monomials of the full degree-ℓ ideal component (the echelon
/// pivots); exposed for the projection-consistency checks.
std::vector<ElemSet> ideal_leading_monomials(const Matroid& m, const ChiMap& chi, const TermOrder& order,
                                             int ell);

} // namespace chios

#endif
