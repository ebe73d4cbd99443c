#include "chios/groebner.hpp"

#include "chios/errors.hpp"
#include "chios/linalg.hpp"

#include <algorithm>

namespace chios {

std::strong_ordering TermOrder::compare(const ElemSet& a, const ElemSet& b) const {
    if (a.size() != b.size())
        return a.size() < b.size() ? std::strong_ordering::less : std::strong_ordering::greater;
    Word pa, pb;
    pa.reserve(a.size());
    pb.reserve(b.size());
    for (int e : a) pa.push_back(perm_.position(e));
    for (int e : b) pb.push_back(perm_.position(e));
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa < pb) return std::strong_ordering::less;
    if (pb < pa) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::optional<std::pair<Rational, ElemSet>> leading_term(const TermOrder& order, const AlgebraElement& f) {
    if (f.is_zero()) return std::nullopt;
    const ElemSet* best = nullptr;
    for (const auto& [s, c] : f.terms())
        if (!best || order.less(*best, s)) best = &s;
    return std::make_pair(f.coefficient(*best), *best);
}

GroebnerBasis reduced_groebner(const Matroid& m, const ChiMap& chi, const TermOrder& order) {
    if (!m.loop_free())
        fail(ErrorKind::LoopPresent, "Groebner construction needs a loop-free matroid");
    std::vector<AlgebraElement> elements;
    for (const auto& c : minimal_broken_circuit_circuits(m, order.perm())) {
        AlgebraElement g = boundary(chi, c);
        auto lt = leading_term(order, g);
        g *= 1 / lt->first;
        elements.push_back(std::move(g));
    }
    std::sort(elements.begin(), elements.end(), [&](const AlgebraElement& a, const AlgebraElement& b) {
        return order.less(leading_term(order, a)->second, leading_term(order, b)->second);
    });
    return GroebnerBasis{GroebnerBasis::Kind::Reduced, order, std::move(elements)};
}

GroebnerBasis universal_groebner(const Matroid& m, const ChiMap& chi) {
    if (!m.loop_free())
        fail(ErrorKind::LoopPresent, "Groebner construction needs a loop-free matroid");
    std::vector<AlgebraElement> elements;
    for (const auto& c : m.circuits())
        elements.push_back(boundary(chi, c));
    return GroebnerBasis{GroebnerBasis::Kind::Universal, TermOrder::natural(m.ground_size()),
                         std::move(elements)};
}

Perm minimality_witness(const Matroid& m, const ElemSet& circuit) {
    std::vector<int> order = circuit;
    for (int e = 1; e <= m.ground_size(); ++e)
        if (!contains(circuit, e)) order.push_back(e);
    return Perm(std::move(order));
}

bool LeadingTermIdeal::divides_some_generator_into(const ElemSet& monomial) const {
    for (const auto& g : generators)
        if (is_subset(g, monomial)) return true;
    return false;
}

LeadingTermIdeal leading_term_ideal(const TermOrder& order, const std::vector<AlgebraElement>& elements) {
    // the generator list keeps one entry per distinct leading monomial;
    // redundant generators (supersets of others) stay listed
    std::vector<ElemSet> lps;
    for (const auto& g : elements) {
        auto lt = leading_term(order, g);
        if (lt) lps.push_back(lt->second);
    }
    std::sort(lps.begin(), lps.end());
    lps.erase(std::unique(lps.begin(), lps.end()), lps.end());
    return LeadingTermIdeal{std::move(lps)};
}

LeadingTermIdeal leading_term_ideal(const TermOrder& order, const GroebnerBasis& g) {
    return leading_term_ideal(order, g.elements);
}

std::vector<ElemSet> canonical_basis(const Matroid& m, const ChiMap& chi, const TermOrder& order, int ell) {
    LeadingTermIdeal lt = leading_term_ideal(order, reduced_groebner(m, chi, order));
    std::vector<ElemSet> out;
    for_each_subset(m.ground_size(), ell, [&](const ElemSet& s) {
        if (!lt.divides_some_generator_into(s)) out.push_back(s);
    });
    return out;
}

namespace {

// echelon of the degree component with columns sorted descending under
// the order, so pivot columns are exactly its leading monomials
struct DegreeEchelon {
    std::vector<ElemSet> monomials;
    Echelon echelon;
};

DegreeEchelon degree_echelon(const Matroid& m, const ChiMap& chi, const TermOrder& order, int ell) {
    DegreeEchelon out;
    for_each_subset(m.ground_size(), ell, [&](const ElemSet& s) { out.monomials.push_back(s); });
    std::sort(out.monomials.begin(), out.monomials.end(),
              [&](const ElemSet& a, const ElemSet& b) { return order.less(b, a); });
    std::vector<AlgebraElement> rows = ideal_degree_basis(m, chi, ell);
    RatMatrix mat(static_cast<int>(rows.size()), static_cast<int>(out.monomials.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < out.monomials.size(); ++c)
            mat.at(static_cast<int>(r), static_cast<int>(c)) = rows[r].coefficient(out.monomials[c]);
    out.echelon = reduced_row_echelon(std::move(mat));
    return out;
}

bool reduces_to_zero(const DegreeEchelon& de, const AlgebraElement& f) {
    std::vector<Rational> v(de.monomials.size());
    for (size_t c = 0; c < de.monomials.size(); ++c) v[c] = f.coefficient(de.monomials[c]);
    for (size_t r = 0; r < de.echelon.pivot_cols.size(); ++r) {
        int p = de.echelon.pivot_cols[r];
        if (v[static_cast<size_t>(p)] == 0) continue;
        Rational factor = v[static_cast<size_t>(p)];
        for (size_t c = 0; c < v.size(); ++c)
            v[c] -= factor * de.echelon.mat.at(static_cast<int>(r), static_cast<int>(c));
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace

std::vector<ElemSet> ideal_leading_monomials(const Matroid& m, const ChiMap& chi, const TermOrder& order,
                                             int ell) {
    DegreeEchelon de = degree_echelon(m, chi, order, ell);
    std::vector<ElemSet> out;
    for (int p : de.echelon.pivot_cols) out.push_back(de.monomials[static_cast<size_t>(p)]);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_groebner(const Matroid& m, const ChiMap& chi, const TermOrder& order,
                 const std::vector<AlgebraElement>& g) {
    // split members into homogeneous components per degree
    std::map<int, std::vector<AlgebraElement>> components;
    for (const auto& f : g) {
        std::map<int, AlgebraElement> split;
        for (const auto& [s, c] : f.terms())
            split[static_cast<int>(s.size())].add_term(s, c);
        for (auto& [deg, comp] : split) {
            if (deg == 0)
                fail(ErrorKind::NotInIdeal, "element has a degree-0 component");
            components[deg].push_back(std::move(comp));
        }
    }

    std::vector<ElemSet> lps;
    for (const auto& f : g) {
        auto lt = leading_term(order, f);
        if (lt) lps.push_back(lt->second);
    }

    int cap = std::min(m.rank() + 1, m.ground_size());
    for (int ell = 0; ell <= cap; ++ell) {
        DegreeEchelon de = degree_echelon(m, chi, order, ell);
        // membership: every component of this degree reduces to zero
        // (above the cap everything is dependent, hence in the ideal)
        if (auto it = components.find(ell); it != components.end())
            for (const auto& comp : it->second)
                if (!reduces_to_zero(de, comp))
                    fail(ErrorKind::NotInIdeal, "element has a nonzero normal form");
        std::vector<ElemSet> pivots;
        for (int p : de.echelon.pivot_cols) pivots.push_back(de.monomials[static_cast<size_t>(p)]);
        std::sort(pivots.begin(), pivots.end());
        std::vector<ElemSet> covered;
        for_each_subset(m.ground_size(), ell, [&](const ElemSet& s) {
            for (const auto& lp : lps)
                if (is_subset(lp, s)) {
                    covered.push_back(s);
                    return;
                }
        });
        if (pivots != covered) return false;
    }
    return true;
}

} // namespace chios
