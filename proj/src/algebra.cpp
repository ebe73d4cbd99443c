#include "chios/algebra.hpp"

#include "chios/errors.hpp"
#include "chios/linalg.hpp"
#include "chios/residues.hpp"

#include <algorithm>

namespace chios {

BetaSystem BetaSystem::exterior() { return BetaSystem(); }

BetaSystem BetaSystem::commutative() {
    BetaSystem b;
    b.mode_ = Mode::Commutative;
    return b;
}

BetaSystem BetaSystem::custom(std::map<std::pair<int, int>, Rational> values) {
    for (const auto& [key, val] : values) {
        if (key.first >= key.second)
            fail(ErrorKind::ValidationError, "beta keys must have i < j");
        if (val == 0)
            fail(ErrorKind::ValidationError, "beta scalars must be nonzero");
    }
    BetaSystem b;
    b.mode_ = Mode::Custom;
    b.values_ = std::move(values);
    return b;
}

Rational BetaSystem::beta(int i, int j) const {
    switch (mode_) {
    case Mode::Exterior: return -1;
    case Mode::Commutative: return 1;
    case Mode::Custom: break;
    }
    auto it = values_.find({i, j});
    if (it == values_.end())
        fail(ErrorKind::ValidationError,
             "no beta value for (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return it->second;
}

AlgebraElement AlgebraElement::monomial(const ElemSet& support, Rational coef) {
    AlgebraElement e;
    e.add_term(support, coef);
    return e;
}

Rational AlgebraElement::coefficient(const ElemSet& support) const {
    auto it = terms_.find(support);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> AlgebraElement::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int deg = static_cast<int>(terms_.begin()->first.size());
    for (const auto& [s, c] : terms_)
        if (static_cast<int>(s.size()) != deg) return std::nullopt;
    return deg;
}

void AlgebraElement::add_term(const ElemSet& support, const Rational& coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.emplace(support, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    for (const auto& [s, c] : other.terms_) add_term(s, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
    for (const auto& [s, c] : other.terms_) add_term(s, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, c] : terms_) c *= scalar;
    return *this;
}

std::optional<ScaledMonomial> mono_mul(const BetaSystem& beta, const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    // insertion sort; every adjacent swap of u past a smaller v costs a
    // factor beta(v, u), and a repeat kills the product (e_i^2 = 0)
    Rational coef = 1;
    for (size_t i = 1; i < w.size(); ++i) {
        size_t j = i;
        while (j > 0 && w[j - 1] > w[j]) {
            coef *= beta.beta(w[j], w[j - 1]);
            std::swap(w[j - 1], w[j]);
            --j;
        }
        if (j > 0 && w[j - 1] == w[j]) return std::nullopt;
    }
    return ScaledMonomial{coef, w};
}

AlgebraElement multiply_monomial(const BetaSystem& beta, const AlgebraElement& f, const Word& w) {
    AlgebraElement out;
    for (const auto& [s, c] : f.terms()) {
        auto p = mono_mul(beta, s, w);
        if (p) out.add_term(p->support, c * p->coef);
    }
    return out;
}

AlgebraElement boundary(const ChiMap& chi, const Word& x) {
    if (x.empty())
        fail(ErrorKind::ValidationError, "boundary of the empty word");
    if (sort_sign(x) == 0)
        fail(ErrorKind::ValidationError, "boundary input repeats an element");
    if (x.size() == 1) return AlgebraElement::monomial({}, 1);
    AlgebraElement out;
    for (size_t p = 0; p < x.size(); ++p) {
        Word rest;
        rest.reserve(x.size() - 1);
        for (size_t q = 0; q < x.size(); ++q)
            if (q != p) rest.push_back(x[q]);
        Rational c = chi(rest);
        if (c == 0) continue;
        if (p % 2 == 0) c = -c; // positions are 1-based in the sign (-1)^p
        ElemSet support = rest;
        std::sort(support.begin(), support.end());
        out.add_term(support, c);
    }
    return out;
}

std::vector<AlgebraElement> ideal_degree_basis(const Matroid& m, const ChiMap& chi, int ell, const Perm& pi) {
    std::vector<AlgebraElement> out;
    if (ell < 0) return out;
    for (const auto& d : dependent_sets(m, ell))
        out.push_back(AlgebraElement::monomial(d, 1));
    // loops enter through their dependent monomials at ell = 1, not as
    // degree-0 boundaries
    if (ell >= 1)
        for (const auto& u : inactive_unidependents(m, ell + 1, pi))
            out.push_back(boundary(chi, u));
    return out;
}

std::vector<AlgebraElement> ideal_degree_basis(const Matroid& m, const ChiMap& chi, int ell) {
    return ideal_degree_basis(m, chi, ell, Perm::natural(m.ground_size()));
}

namespace {

std::vector<ElemSet> degree_monomials(int n, int ell) {
    std::vector<ElemSet> out;
    for_each_subset(n, ell, [&](const ElemSet& s) { out.push_back(s); });
    return out;
}

std::vector<Rational> element_coordinates(const AlgebraElement& f, const std::vector<ElemSet>& monomials) {
    std::vector<Rational> v(monomials.size());
    for (size_t i = 0; i < monomials.size(); ++i)
        v[i] = f.coefficient(monomials[i]);
    return v;
}

} // namespace

IdealReducer::IdealReducer(const Matroid& m, const ChiMap& chi, int ell, std::vector<ElemSet> complement)
    : ell_(ell) {
    std::vector<ElemSet> comp = std::move(complement);
    std::sort(comp.begin(), comp.end());
    if (std::adjacent_find(comp.begin(), comp.end()) != comp.end())
        fail(ErrorKind::ValidationError, "complement repeats a monomial");
    for (const auto& c : comp)
        if (static_cast<int>(c.size()) != ell)
            fail(ErrorKind::SizeMismatch, "complement monomial of wrong degree");
    for (const auto& s : degree_monomials(m.ground_size(), ell))
        if (!std::binary_search(comp.begin(), comp.end(), s)) monomials_.push_back(s);
    complement_begin_ = monomials_.size();
    monomials_.insert(monomials_.end(), comp.begin(), comp.end());

    std::vector<AlgebraElement> rows = ideal_degree_basis(m, chi, ell);
    RatMatrix mat(static_cast<int>(rows.size()), static_cast<int>(monomials_.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < monomials_.size(); ++c)
            mat.at(static_cast<int>(r), static_cast<int>(c)) = rows[r].coefficient(monomials_[c]);
    Echelon e = reduced_row_echelon(std::move(mat));
    rref_ = std::move(e.mat);
    pivots_ = std::move(e.pivot_cols);
    for (int p : pivots_)
        if (static_cast<size_t>(p) >= complement_begin_)
            fail(ErrorKind::InconsistentSystem, "complement monomials are dependent modulo the ideal");
}

std::map<ElemSet, Rational> IdealReducer::reduce(const AlgebraElement& f) const {
    if (f.is_zero()) return {};
    auto deg = f.homogeneous_degree();
    if (!deg || *deg != ell_)
        fail(ErrorKind::SizeMismatch, "reduction needs a homogeneous element of the reducer's degree");
    std::vector<Rational> v = element_coordinates(f, monomials_);
    for (size_t r = 0; r < pivots_.size(); ++r) {
        int p = pivots_[r];
        if (v[static_cast<size_t>(p)] == 0) continue;
        Rational factor = v[static_cast<size_t>(p)];
        for (size_t c = 0; c < monomials_.size(); ++c)
            v[c] -= factor * rref_.at(static_cast<int>(r), static_cast<int>(c));
    }
    for (size_t c = 0; c < complement_begin_; ++c)
        if (v[c] != 0)
            fail(ErrorKind::InconsistentSystem, "element does not reduce into the complement span");
    std::map<ElemSet, Rational> out;
    for (size_t c = complement_begin_; c < monomials_.size(); ++c)
        if (v[c] != 0) out.emplace(monomials_[c], v[c]);
    return out;
}

std::map<ElemSet, Rational> reduce_modulo_ideal(const Matroid& m, const ChiMap& chi, const AlgebraElement& f,
                                                const std::vector<ElemSet>& complement) {
    if (f.is_zero()) return {};
    auto deg = f.homogeneous_degree();
    if (!deg)
        fail(ErrorKind::SizeMismatch, "reduction needs a homogeneous element");
    return IdealReducer(m, chi, *deg, complement).reduce(f);
}

std::map<ElemSet, Rational> expand_over_sets_oracle(const Matroid& m, const ChiMap& chi, const Word& j,
                                                    const std::vector<ElemSet>& candidate_basis) {
    if (sort_sign(j) == 0)
        fail(ErrorKind::ValidationError, "target word repeats an element");
    ElemSet jset = j;
    std::sort(jset.begin(), jset.end());
    if (!m.is_independent(jset))
        fail(ErrorKind::DependentInput, set_str(jset) + " is dependent");
    return reduce_modulo_ideal(m, chi, AlgebraElement::monomial(jset, 1), candidate_basis);
}

std::map<ElemSet, Rational> nbc_expand_oracle(const Matroid& m, const ChiMap& chi, const Word& j, const Perm& pi) {
    return expand_over_sets_oracle(m, chi, j, nbc_sets(m, pi, static_cast<int>(j.size())));
}

std::map<ElemSet, Rational> nbc_expand(const Matroid& m, const ChiMap& chi, const Word& j, const Perm& pi) {
    if (sort_sign(j) == 0)
        fail(ErrorKind::ValidationError, "target word repeats an element");
    ElemSet jset = j;
    std::sort(jset.begin(), jset.end());
    if (!m.is_independent(jset))
        fail(ErrorKind::DependentInput, set_str(jset) + " is dependent");
    int ell = static_cast<int>(jset.size());
    std::map<ElemSet, Rational> out;
    for (const auto& i : nbc_sets(m, pi, ell)) {
        Word wi = pi.sorted_word(i);
        auto jw = match_flag(m, jset, flag(m, wi));
        if (!jw) continue;
        Rational coef = chi(wi) / chi(*jw);
        if (coef != 0) out.emplace(i, coef);
    }
    return out;
}

int quotient_dimension(const Matroid& m, const ChiMap& chi, int ell) {
    IdealReducer reducer(m, chi, ell, {});
    return reducer.monomial_count() - reducer.ideal_rank();
}

} // namespace chios
