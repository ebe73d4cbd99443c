#ifndef CHIOS_ALGEBRA_HPP
#define CHIOS_ALGEBRA_HPP

#include "chios/chi.hpp"
#include "chios/linalg.hpp"
#include "chios/matroid.hpp"
#include "chios/perm.hpp"
#include "chios/rational.hpp"
#include "chios/sets.hpp"

#include <map>
#include <optional>
#include <vector>

namespace chios {

/// Commutation scalars of the graded algebra: e_j·e_i = β(i,j)·e_i·e_j
/// for i < j, with every β(i,j) nonzero. Exterior means β ≡ -1,
/// commutative β ≡ +1.
class BetaSystem {
public:
    enum class Mode { Exterior, Commutative, Custom };

    static BetaSystem exterior();
    static BetaSystem commutative();
    /// Arbitrary nonzero scalars; beta(i,j) queried with i < j.
    static BetaSystem custom(std::map<std::pair<int, int>, Rational> values);

    Mode mode() const { return mode_; }
    Rational beta(int i, int j) const; // requires i < j

private:
    Mode mode_ = Mode::Exterior;
    std::map<std::pair<int, int>, Rational> values_;
};

/// Finite rational linear combination of square-free monomials e_X,
/// supports kept canonical (increasing). No zero coefficients stored.
class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement monomial(const ElemSet& support, Rational coef = 1);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ElemSet, Rational>& terms() const { return terms_; }

    Rational coefficient(const ElemSet& support) const;

    /// Degree when homogeneous, nullopt for 0 or mixed degrees.
    std::optional<int> homogeneous_degree() const;

    void add_term(const ElemSet& support, const Rational& coef);

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Rational& scalar);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
    bool operator==(const AlgebraElement& other) const { return terms_ == other.terms_; }

private:
    std::map<ElemSet, Rational> terms_;
};

/// Product of two monomials given as words: zero when supports meet,
/// otherwise the canonical monomial on the union with the scalar
/// accumulated from β-swaps while sorting the concatenation.
struct ScaledMonomial {
    Rational coef;
    ElemSet support;
};
std::optional<ScaledMonomial> mono_mul(const BetaSystem& beta, const Word& a, const Word& b);

/// Right-multiplication f·e_W in the algebra.
AlgebraElement multiply_monomial(const BetaSystem& beta, const AlgebraElement& f, const Word& w);

/// χ-boundary of a word: sum over positions p of (-1)^p χ(X minus p-th
/// entry) e_{X minus p-th entry}; the boundary of a singleton is 1.
/// Applying it to a reordered word rescales by the sign of the
/// reordering.
AlgebraElement boundary(const ChiMap& chi, const Word& x);

/// Basis of the degree-ℓ component of the boundary ideal: the dependent
/// ℓ-monomials together with boundaries of the inactive unidependent
/// (ℓ+1)-sets. Deterministic order: dependents lex, then boundaries by
/// their unidependent set.
std::vector<AlgebraElement> ideal_degree_basis(const Matroid& m, const ChiMap& chi, int ell);
std::vector<AlgebraElement> ideal_degree_basis(const Matroid& m, const ChiMap& chi, int ell, const Perm& pi);

/// Coefficients of the class of e_J in the π-nbc basis, computed by flag
/// matching: the coefficient at I is χ(I ordered π-increasingly)/χ(J^τ)
/// for the unique τ aligning the flags, else 0. Throws DependentInput.
std::map<ElemSet, Rational> nbc_expand(const Matroid& m, const ChiMap& chi, const Word& j, const Perm& pi);

/// Same coefficients by plain linear algebra: reduce e_J against the
/// degree-ℓ ideal basis with the nbc monomials as the complement.
/// Independent of the flag/residue route. Throws DependentInput;
/// InconsistentSystem signals a broken ideal basis.
std::map<ElemSet, Rational> nbc_expand_oracle(const Matroid& m, const ChiMap& chi, const Word& j, const Perm& pi);

/// Linear-algebra expansion of e_J over an arbitrary candidate family of
/// independent ℓ-sets modulo the ideal; InconsistentSystem when the
/// family is not a basis of the degree-ℓ quotient.
std::map<ElemSet, Rational> expand_over_sets_oracle(const Matroid& m, const ChiMap& chi, const Word& j,
                                                    const std::vector<ElemSet>& candidate_basis);

/// Reduction of an arbitrary homogeneous element modulo the ideal,
/// expressed over the given complement monomials (defaults: nbc sets).
std::map<ElemSet, Rational> reduce_modulo_ideal(const Matroid& m, const ChiMap& chi, const AlgebraElement& f,
                                                const std::vector<ElemSet>& complement);

/// One echelonized copy of the degree-ℓ ideal component, reusable for
/// many reductions. Columns are ordered with the complement monomials
/// last, so the ideal rows can never pivot there unless the complement
/// is dependent modulo the ideal (flagged InconsistentSystem upfront).
class IdealReducer {
public:
    IdealReducer(const Matroid& m, const ChiMap& chi, int ell, std::vector<ElemSet> complement);

    /// Coefficients over the complement of the class of f (homogeneous
    /// of the reducer's degree). InconsistentSystem when f does not
    /// reduce into the complement span.
    std::map<ElemSet, Rational> reduce(const AlgebraElement& f) const;

    int degree() const { return ell_; }
    int ideal_rank() const { return static_cast<int>(pivots_.size()); }
    int monomial_count() const { return static_cast<int>(monomials_.size()); }

private:
    int ell_;
    std::vector<ElemSet> monomials_; // column order, complement last
    size_t complement_begin_;
    RatMatrix rref_;
    std::vector<int> pivots_;
};

/// dim 𝔸_ℓ computed as C(n,ℓ) minus the rank of the degree-ℓ ideal
/// basis rows (no nbc counting involved).
int quotient_dimension(const Matroid& m, const ChiMap& chi, int ell);

} // namespace chios

#endif
