#ifndef CHIOS_RESIDUES_HPP
#define CHIOS_RESIDUES_HPP

#include "chios/chi.hpp"
#include "chios/matroid.hpp"
#include "chios/rational.hpp"
#include "chios/sets.hpp"
#include "chios/vector_config.hpp"

#include <map>
#include <optional>
#include <vector>

namespace chios {

/// χ-map of a single-element deletion minor, over the minor's relabeled
/// 1..n-1 ground set: the restriction of χ.
ChiMap chi_delete(const ChiMap& chi, int x);

/// χ-map of a single-element contraction minor, over the relabeled
/// ground set: χ'(X) = χ(X ∘ x).
ChiMap chi_contract(const ChiMap& chi, int x);

/// One residue step at x applied to the monomial of the ordered
/// independent set: e_{I\x} when x ∈ I; the χ-ratio times e_{I\y} when
/// some y ∈ I is parallel to x ({x,y} a circuit); nullopt otherwise.
/// The support comes back in the parent matroid's labels.
struct ResidueStep {
    Rational coef;
    ElemSet support;
};
std::optional<ResidueStep> residue_step(const Matroid& m, const ChiMap& chi, int x, const ElemSet& i);

/// The iterated residue of the ordered independent set given as a word:
/// the steps are applied right to left (last word position first),
/// contracting as they go. Evaluates the induced linear form on e_J.
Rational iterated_residue(const Matroid& m, const ChiMap& chi, const Word& i_word, const ElemSet& j);

/// The flag of an ordered independent set: the strictly increasing chain
/// of closures of the word's suffixes, shortest first.
using FlagChain = std::vector<ElemSet>;
FlagChain flag(const Matroid& m, const Word& i_word);

/// The unique ordering of j whose flag equals the given chain, when one
/// exists.
std::optional<Word> match_flag(const Matroid& m, const ElemSet& j, const FlagChain& target);

/// An independent set with a fixed ordering, the ordering given as the
/// images sigma(1..ℓ) applied to the increasing word of the set.
struct DiagonalEntry {
    ElemSet set;
    std::vector<int> sigma;

    Word ordered_word() const;
};
using DiagonalBasisCandidate = std::vector<DiagonalEntry>;

DiagonalEntry diagonal_entry_identity(const ElemSet& s);
DiagonalBasisCandidate nbc_diagonal_candidate(const Matroid& m, int ell); // natural-order nbc, sigma = id

/// Checks the three diagonal-basis conditions: fixed orderings, size at
/// least dim 𝔸_ℓ, and no entry's flag reachable by reordering another
/// entry (all ℓ! orderings tried).
bool is_diagonal_basis(const Matroid& m, const DiagonalBasisCandidate& cand);

/// The matrix of iterated residues of the entries against each other's
/// monomials; the identity exactly when the candidate is diagonal.
/// Throws NotDiagonal when it is not.
std::vector<std::vector<Rational>> dual_pairing_matrix(const Matroid& m, const ChiMap& chi,
                                                       const DiagonalBasisCandidate& cand);

/// Coefficients of the class of e_J over a diagonal basis, each computed
/// as the iterated residue of the entry's fixed ordering at e_J.
std::map<ElemSet, Rational> expand_in_diagonal_basis(const Matroid& m, const ChiMap& chi,
                                                     const DiagonalBasisCandidate& cand, const ElemSet& j);

/// Degreewise check of the split short exact sequence through x: the nbc
/// partition, the dimension identities, and the two composite-map
/// identities on nbc representatives. Requires a simple matroid.
struct ExactSequenceRow {
    int ell;
    int dim_full;
    int dim_deletion;
    int dim_contraction; // of degree ell-1
};
struct ExactSequenceReport {
    int element = 0;
    std::vector<ExactSequenceRow> rows;
    bool dims_ok = false;
    bool partition_ok = false;
    bool proj_after_inc_zero = false;
    bool section_identity = false;

    bool ok() const { return dims_ok && partition_ok && proj_after_inc_zero && section_identity; }
};
ExactSequenceReport exact_sequence_check(const Matroid& m, const ChiMap& chi, int x);

/// Sum of the coefficients of e_J over a diagonal basis for the
/// determinant χ of an affine-normalized configuration (all last
/// coordinates 1); the value is 1.
Rational residue_sum_check(const VectorConfig& v, const DiagonalBasisCandidate& cand, const ElemSet& j);

} // namespace chios

#endif
