#ifndef CHIOS_MATROID_HPP
#define CHIOS_MATROID_HPP

#include "chios/perm.hpp"
#include "chios/sets.hpp"

#include <optional>
#include <vector>

namespace chios {

/// A matroid on the ground set 1..n given by its circuits (the
/// inclusion-minimal dependent sets). Loops are singleton circuits.
/// Immutable after construction; every query is a pure function.
class Matroid {
public:
    /// Validates element ranges and pairwise incomparability of the
    /// circuits. The circuit-elimination axiom is verified exhaustively
    /// for n ≤ 12; above that only incomparability is enforced and
    /// elimination_checked() reports false.
    static Matroid from_circuits(int n, std::vector<ElemSet> circuits);

    int ground_size() const { return n_; }
    const std::vector<ElemSet>& circuits() const { return circuits_; }
    bool elimination_checked() const { return elimination_checked_; }

    ElemSet ground_set() const;

    /// True iff no circuit is contained in x.
    bool is_independent(const ElemSet& x) const;

    /// Size of a maximal independent subset of x (greedy extension).
    int rank(const ElemSet& x) const;
    int rank() const; // rank of the full ground set

    /// x together with every y whose addition does not raise the rank.
    ElemSet closure(const ElemSet& x) const;

    bool is_flat(const ElemSet& x) const;

    /// rank(u) = |u| - 1, i.e. u contains exactly one circuit.
    bool is_unidependent(const ElemSet& u) const;

    /// The single circuit contained in a unidependent set.
    /// Throws NotUnidependent otherwise.
    ElemSet unique_circuit(const ElemSet& u) const;

    bool is_loop(int x) const;
    bool loop_free() const;
    /// No loops and no two-element circuits.
    bool is_simple() const;

private:
    Matroid(int n, std::vector<ElemSet> circuits, bool elimination_checked);

    int n_;
    std::vector<ElemSet> circuits_;       // sorted sets, family sorted lexicographically
    std::vector<uint64_t> circuit_masks_; // empty when n_ > 64
    bool elimination_checked_;
};

/// A single-element minor together with the relabeling back to the
/// parent: the minor's ground set is 1..n-1 and to_parent[i-1] is the
/// parent label of the minor's element i.
struct Minor {
    Matroid matroid;
    std::vector<int> to_parent;

    int parent_label(int e) const { return to_parent[static_cast<size_t>(e - 1)]; }
    ElemSet parent_labels(const ElemSet& s) const;
};

Minor deletion(const Matroid& m, int x);
/// Throws LoopContraction when x is a loop.
Minor contraction(const Matroid& m, int x);

/// The broken circuits under the reordering: C minus its π-smallest
/// element, over all circuits with |C| > 1. Throws LoopPresent when the
/// matroid has a loop (a loop's broken circuit would be empty).
std::vector<ElemSet> broken_circuits(const Matroid& m, const Perm& pi);

/// All independent ℓ-sets containing no π-broken circuit, in
/// lexicographic order.
std::vector<ElemSet> nbc_sets(const Matroid& m, const Perm& pi, int ell);

std::vector<ElemSet> dependent_sets(const Matroid& m, int ell);
std::vector<ElemSet> independent_sets(const Matroid& m, int ell);

/// An element a outside an independent set i, with a ∈ cl(i), is active
/// in i when a is the π-smallest element of the unique circuit in i ∪ a.
bool is_active_in(const Matroid& m, const ElemSet& independent, int a, const Perm& pi);

/// Size-ℓ unidependent sets u whose circuit's π-smallest element α is
/// also the π-smallest element active in u \ α.
std::vector<ElemSet> inactive_unidependents(const Matroid& m, int ell, const Perm& pi);
std::vector<ElemSet> inactive_unidependents(const Matroid& m, int ell); // natural order

/// The circuits whose π-broken circuit B = C \ α is inclusion-minimal
/// among all π-broken circuits, keeping one circuit per shared B: the one
/// with α = π-min(cl(B) \ B). Boundaries of exactly these circuits form
/// the reduced Groebner basis for the degree-lex order of π.
std::vector<ElemSet> minimal_broken_circuit_circuits(const Matroid& m, const Perm& pi);

} // namespace chios

#endif
