#include "chios/residues.hpp"

#include "chios/errors.hpp"

#include <algorithm>
#include <numeric>

namespace chios {

namespace {

// minor labels 1..n-1 lift to parent labels by skipping x
Word lift_word(const Word& w, int x) {
    Word out;
    out.reserve(w.size());
    for (int e : w) out.push_back(e < x ? e : e + 1);
    return out;
}

} // namespace

ChiMap chi_delete(const ChiMap& chi, int x) {
    ChiMap parent = chi;
    return ChiMap(chi.kind(), chi.ground_size() - 1,
                  [parent, x](const Word& w) { return parent(lift_word(w, x)); });
}

ChiMap chi_contract(const ChiMap& chi, int x) {
    ChiMap parent = chi;
    return ChiMap(chi.kind(), chi.ground_size() - 1, [parent, x](const Word& w) {
        Word lifted = lift_word(w, x);
        lifted.push_back(x);
        return parent(lifted);
    });
}

namespace {

// Matroid and χ queries relative to a contracted independent set,
// working entirely in parent labels. The contraction word keeps the most
// recent element first, which is exactly the order χ wants appended.
struct Contracted {
    const Matroid& m;
    const ChiMap& chi;
    Word contraction; // newest first
    ElemSet contraction_set;

    int rank_with(const ElemSet& s) const { return m.rank(set_union(s, contraction_set)); }

    bool non_loop(int x) const {
        return rank_with({x}) == static_cast<int>(contraction_set.size()) + 1;
    }

    bool parallel(int x, int y) const {
        int base = static_cast<int>(contraction_set.size());
        return non_loop(x) && non_loop(y) && rank_with({std::min(x, y), std::max(x, y)}) == base + 1;
    }

    Rational chi_value(Word w) const {
        w.insert(w.end(), contraction.begin(), contraction.end());
        return chi(w);
    }

    void contract(int x) {
        contraction.insert(contraction.begin(), x);
        contraction_set = with_element(contraction_set, x);
    }

    // one residue step at x on the canonical monomial of `support`;
    // contracts x afterwards
    std::optional<Rational> step(int x, ElemSet& support) {
        if (contains(support, x)) {
            support = without_element(support, x);
            contract(x);
            return Rational(1);
        }
        for (int y : support) {
            if (!parallel(x, y)) continue;
            Word rest = without_element(support, y);
            Word num = rest, den = rest;
            num.push_back(x);
            den.push_back(y);
            Rational coef = chi_value(num) / chi_value(den);
            support = without_element(support, y);
            contract(x);
            return coef;
        }
        return std::nullopt;
    }
};

} // namespace

std::optional<ResidueStep> residue_step(const Matroid& m, const ChiMap& chi, int x, const ElemSet& i) {
    if (x < 1 || x > m.ground_size())
        fail(ErrorKind::ElementOutOfRange, "element " + std::to_string(x));
    if (m.is_loop(x))
        fail(ErrorKind::LoopContraction, "cannot contract loop " + std::to_string(x));
    if (!m.is_independent(i))
        fail(ErrorKind::DependentInput, set_str(i) + " is dependent");
    Contracted state{m, chi, {}, {}};
    ElemSet support = i;
    auto coef = state.step(x, support);
    if (!coef) return std::nullopt;
    return ResidueStep{*coef, support};
}

Rational iterated_residue(const Matroid& m, const ChiMap& chi, const Word& i_word, const ElemSet& j) {
    if (i_word.size() != j.size())
        fail(ErrorKind::SizeMismatch, "word and target have different sizes");
    if (sort_sign(i_word) == 0)
        fail(ErrorKind::ValidationError, "word repeats an element");
    ElemSet iset = i_word;
    std::sort(iset.begin(), iset.end());
    if (!m.is_independent(iset))
        fail(ErrorKind::DependentInput, set_str(iset) + " is dependent");
    if (!m.is_independent(j))
        fail(ErrorKind::DependentInput, set_str(j) + " is dependent");

    Contracted state{m, chi, {}, {}};
    ElemSet support = j;
    Rational value = 1;
    for (size_t p = i_word.size(); p-- > 0;) {
        auto coef = state.step(i_word[p], support);
        if (!coef) return 0;
        value *= *coef;
    }
    return value;
}

FlagChain flag(const Matroid& m, const Word& i_word) {
    if (sort_sign(i_word) == 0)
        fail(ErrorKind::ValidationError, "word repeats an element");
    ElemSet iset = i_word;
    std::sort(iset.begin(), iset.end());
    if (!m.is_independent(iset))
        fail(ErrorKind::DependentInput, set_str(iset) + " is dependent");
    FlagChain chain;
    ElemSet suffix;
    for (size_t p = i_word.size(); p-- > 0;) {
        suffix = with_element(suffix, i_word[p]);
        chain.push_back(m.closure(suffix));
    }
    return chain;
}

std::optional<Word> match_flag(const Matroid& m, const ElemSet& j, const FlagChain& target) {
    if (target.size() != j.size()) return std::nullopt;
    size_t ell = j.size();
    Word reversed; // j elements from innermost flag step outwards
    ElemSet used;
    for (size_t k = 0; k < ell; ++k) {
        int found = 0, pick = 0;
        for (int e : j) {
            if (contains(used, e) || !contains(target[k], e)) continue;
            ++found;
            pick = e;
        }
        if (found != 1) return std::nullopt;
        reversed.push_back(pick);
        used = with_element(used, pick);
    }
    Word word(reversed.rbegin(), reversed.rend());
    if (flag(m, word) != target) return std::nullopt;
    return word;
}

Word DiagonalEntry::ordered_word() const {
    Word w(set.size());
    for (size_t k = 0; k < set.size(); ++k)
        w[k] = set[static_cast<size_t>(sigma[k] - 1)];
    return w;
}

DiagonalEntry diagonal_entry_identity(const ElemSet& s) {
    std::vector<int> id(s.size());
    std::iota(id.begin(), id.end(), 1);
    return DiagonalEntry{s, id};
}

DiagonalBasisCandidate nbc_diagonal_candidate(const Matroid& m, int ell) {
    DiagonalBasisCandidate cand;
    for (const auto& s : nbc_sets(m, Perm::natural(m.ground_size()), ell))
        cand.push_back(diagonal_entry_identity(s));
    return cand;
}

namespace {

void validate_candidate(const Matroid& m, const DiagonalBasisCandidate& cand) {
    if (cand.empty())
        fail(ErrorKind::ValidationError, "empty diagonal-basis candidate");
    size_t ell = cand.front().set.size();
    std::vector<ElemSet> seen;
    for (const auto& entry : cand) {
        if (entry.set.size() != ell)
            fail(ErrorKind::SizeMismatch, "candidate entries of mixed sizes");
        if (!is_sorted_set(entry.set))
            fail(ErrorKind::ValidationError, "candidate sets must be sorted");
        if (!m.is_independent(entry.set))
            fail(ErrorKind::DependentInput, set_str(entry.set) + " is dependent");
        // sigma must be a bijection on 1..ell
        std::vector<bool> hit(ell, false);
        if (entry.sigma.size() != ell)
            fail(ErrorKind::ValidationError, "sigma length mismatch for " + set_str(entry.set));
        for (int v : entry.sigma) {
            if (v < 1 || v > static_cast<int>(ell) || hit[static_cast<size_t>(v - 1)])
                fail(ErrorKind::ValidationError, "sigma is not a permutation for " + set_str(entry.set));
            hit[static_cast<size_t>(v - 1)] = true;
        }
        seen.push_back(entry.set);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        fail(ErrorKind::ValidationError, "candidate repeats a set");
}

} // namespace

bool is_diagonal_basis(const Matroid& m, const DiagonalBasisCandidate& cand) {
    validate_candidate(m, cand);
    int ell = static_cast<int>(cand.front().set.size());
    int dim = static_cast<int>(nbc_sets(m, Perm::natural(m.ground_size()), ell).size());
    if (static_cast<int>(cand.size()) < dim) return false;
    for (const auto& entry : cand) {
        FlagChain target = flag(m, entry.ordered_word());
        for (const auto& other : cand) {
            if (other.set == entry.set) continue;
            Word w = other.set;
            std::sort(w.begin(), w.end());
            do {
                if (flag(m, w) == target) return false;
            } while (std::next_permutation(w.begin(), w.end()));
        }
    }
    return true;
}

std::vector<std::vector<Rational>> dual_pairing_matrix(const Matroid& m, const ChiMap& chi,
                                                       const DiagonalBasisCandidate& cand) {
    if (!is_diagonal_basis(m, cand))
        fail(ErrorKind::NotDiagonal, "candidate fails the diagonal-basis conditions");
    std::vector<std::vector<Rational>> out;
    out.reserve(cand.size());
    for (const auto& row : cand) {
        std::vector<Rational> r;
        r.reserve(cand.size());
        Word w = row.ordered_word();
        for (const auto& col : cand)
            r.push_back(iterated_residue(m, chi, w, col.set));
        out.push_back(std::move(r));
    }
    return out;
}

std::map<ElemSet, Rational> expand_in_diagonal_basis(const Matroid& m, const ChiMap& chi,
                                                     const DiagonalBasisCandidate& cand, const ElemSet& j) {
    if (!is_diagonal_basis(m, cand))
        fail(ErrorKind::NotDiagonal, "candidate fails the diagonal-basis conditions");
    if (!m.is_independent(j))
        fail(ErrorKind::DependentInput, set_str(j) + " is dependent");
    if (j.size() != cand.front().set.size())
        fail(ErrorKind::SizeMismatch, "target size differs from candidate degree");
    std::map<ElemSet, Rational> out;
    for (const auto& entry : cand) {
        Rational c = iterated_residue(m, chi, entry.ordered_word(), j);
        if (c != 0) out.emplace(entry.set, c);
    }
    return out;
}

ExactSequenceReport exact_sequence_check(const Matroid& m, const ChiMap& chi, int x) {
    if (x < 1 || x > m.ground_size())
        fail(ErrorKind::ElementOutOfRange, "element " + std::to_string(x));
    if (!m.is_simple())
        fail(ErrorKind::NotSimple, "exact sequence check needs a simple matroid");

    ExactSequenceReport report;
    report.element = x;

    Minor del = deletion(m, x);
    Minor con = contraction(m, x);

    // reorder so x is the largest element; the partition identity is
    // stated in that order
    std::vector<int> order;
    for (int e = 1; e <= m.ground_size(); ++e)
        if (e != x) order.push_back(e);
    order.push_back(x);
    Perm pi_x(order);
    Perm nat = Perm::natural(m.ground_size());

    report.dims_ok = true;
    report.partition_ok = true;
    report.proj_after_inc_zero = true;
    report.section_identity = true;

    int r = m.rank();
    for (int ell = 0; ell <= r; ++ell) {
        auto full_nat = nbc_sets(m, nat, ell);
        auto full_pix = nbc_sets(m, pi_x, ell);
        auto del_part = nbc_sets(del.matroid, Perm::natural(del.matroid.ground_size()), ell);
        auto con_part = nbc_sets(con.matroid, Perm::natural(con.matroid.ground_size()), ell - 1);

        ExactSequenceRow row{ell, static_cast<int>(full_nat.size()), static_cast<int>(del_part.size()),
                             static_cast<int>(con_part.size())};
        report.rows.push_back(row);
        if (row.dim_full != row.dim_deletion + row.dim_contraction) report.dims_ok = false;
        if (full_pix.size() != full_nat.size()) report.dims_ok = false;

        std::vector<ElemSet> assembled;
        for (const auto& s : del_part) assembled.push_back(del.parent_labels(s));
        for (const auto& s : con_part) assembled.push_back(with_element(con.parent_labels(s), x));
        std::sort(assembled.begin(), assembled.end());
        if (assembled != full_pix) report.partition_ok = false;

        for (const auto& s : del_part) {
            if (residue_step(m, chi, x, del.parent_labels(s)).has_value()) {
                report.proj_after_inc_zero = false;
                break;
            }
        }
        for (const auto& s : con_part) {
            ElemSet parent = con.parent_labels(s);
            auto step = residue_step(m, chi, x, with_element(parent, x));
            if (!step || step->coef != 1 || step->support != parent) {
                report.section_identity = false;
                break;
            }
        }
    }
    return report;
}

Rational residue_sum_check(const VectorConfig& v, const DiagonalBasisCandidate& cand, const ElemSet& j) {
    if (!v.affine_normalized())
        fail(ErrorKind::NotAffineNormalized, "all vectors must have last coordinate 1");
    Matroid m = circuits_from_vectors(v);
    ChiMap chi = chi_ot(v, m, FlatBasisAssignment::lex_default());
    auto coefs = expand_in_diagonal_basis(m, chi, cand, j);
    Rational sum = 0;
    for (const auto& [s, c] : coefs) sum += c;
    return sum;
}

} // namespace chios
