#include "chios/verify.hpp"

#include "chios/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace chios {

namespace {

CheckResult pass(const std::string& name) { return CheckResult{name, true, ""}; }
CheckResult failed(const std::string& name, const std::string& detail) {
    return CheckResult{name, false, detail};
}
CheckResult skipped(const std::string& name, const std::string& why) {
    return CheckResult{name, true, "skipped: " + why};
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<ElemSet> subsets_up_to(int n, int max_size) {
    std::vector<ElemSet> out;
    for (int k = 0; k <= std::min(n, max_size); ++k)
        for_each_subset(n, k, [&](const ElemSet& s) { out.push_back(s); });
    return out;
}

std::vector<Word> all_orderings(const ElemSet& s) {
    Word w = s;
    std::vector<Word> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace

std::vector<Perm> random_perms(int n, int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<Perm> out;
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    for (int i = 0; i < count; ++i) {
        std::shuffle(order.begin(), order.end(), rng);
        out.emplace_back(order);
    }
    return out;
}

CheckResult check_matroid_axioms(const Matroid& m) {
    const std::string name = "matroid-axioms";
    try {
        Matroid copy = Matroid::from_circuits(m.ground_size(), m.circuits());
        if (m.ground_size() <= 12 && !copy.elimination_checked())
            return failed(name, "elimination check unexpectedly skipped");
    } catch (const Error& e) {
        return failed(name, e.what());
    }
    return pass(name);
}

CheckResult check_closure_rank(const Matroid& m) {
    const std::string name = "closure-rank";
    if (m.ground_size() > 10) return skipped(name, "ground set too large for exhaustive pass");
    for (const auto& x : subsets_up_to(m.ground_size(), m.ground_size())) {
        ElemSet cl = m.closure(x);
        if (!is_subset(x, cl)) return failed(name, "closure not extensive at " + set_str(x));
        if (m.closure(cl) != cl) return failed(name, "closure not idempotent at " + set_str(x));
        if (m.rank(cl) != m.rank(x)) return failed(name, "closure changes rank at " + set_str(x));
        int r = m.rank(x);
        if (r > static_cast<int>(x.size())) return failed(name, "rank exceeds size at " + set_str(x));
        if ((r == static_cast<int>(x.size())) != m.is_independent(x))
            return failed(name, "rank/independence mismatch at " + set_str(x));
    }
    return pass(name);
}

CheckResult check_minors_valid(const Matroid& m) {
    const std::string name = "minors-valid";
    try {
        for (int x = 1; x <= m.ground_size(); ++x) {
            Minor del = deletion(m, x);
            if (del.matroid.rank() > m.rank()) return failed(name, "deletion raised rank");
            if (m.is_loop(x)) continue;
            Minor con = contraction(m, x);
            if (con.matroid.rank() != m.rank() - 1)
                return failed(name, "contraction rank off at " + std::to_string(x));
        }
    } catch (const Error& e) {
        return failed(name, e.what());
    }
    return pass(name);
}

CheckResult check_nbc_permutation_invariance(const Matroid& m, const std::vector<Perm>& perms) {
    const std::string name = "nbc-count-permutation-invariant";
    Perm nat = Perm::natural(m.ground_size());
    for (int ell = 0; ell <= m.rank(); ++ell) {
        size_t expected = nbc_sets(m, nat, ell).size();
        for (const auto& pi : perms)
            if (nbc_sets(m, pi, ell).size() != expected)
                return failed(name, "count differs at degree " + std::to_string(ell) + " for order " + pi.str());
    }
    return pass(name);
}

CheckResult check_dimension_identity(const Matroid& m, const std::vector<Perm>& perms) {
    const std::string name = "dimension-identity";
    std::vector<Perm> all = perms;
    all.push_back(Perm::natural(m.ground_size()));
    for (const auto& pi : all) {
        for (int ell = 0; ell <= m.ground_size(); ++ell) {
            long long total = static_cast<long long>(nbc_sets(m, pi, ell).size()) +
                              static_cast<long long>(inactive_unidependents(m, ell + 1, pi).size()) +
                              static_cast<long long>(dependent_sets(m, ell).size());
            if (total != binom(m.ground_size(), ell))
                return failed(name, "identity fails at degree " + std::to_string(ell) + " for order " + pi.str());
        }
    }
    return pass(name);
}

CheckResult check_chi_antisymmetry(const Matroid& m, const ChiMap& chi) {
    const std::string name = "chi-antisymmetry";
    int cap = std::min(4, m.rank());
    for (int ell = 1; ell <= cap; ++ell)
        for (const auto& i : independent_sets(m, ell)) {
            Rational base = chi(i);
            for (const auto& w : all_orderings(i))
                if (chi(w) != Rational(sort_sign(w)) * base)
                    return failed(name, "antisymmetry fails on " + set_str(i));
        }
    return pass(name);
}

CheckResult check_chi_support(const Matroid& m, const ChiMap& chi) {
    const std::string name = "chi-support";
    if (m.ground_size() > 10) return skipped(name, "ground set too large for exhaustive pass");
    for (const auto& x : subsets_up_to(m.ground_size(), m.rank()))
        if ((chi(x) != 0) != m.is_independent(x))
            return failed(name, "support axiom fails on " + set_str(x));
    return pass(name);
}

CheckResult check_axiom_proportionality(const Matroid& m, const ChiMap& chi, const BetaSystem& beta,
                                        int max_unidependent_size) {
    const std::string name = "axiom-proportionality";
    int cap = std::min({max_unidependent_size, m.rank() + 1, m.ground_size()});
    std::string bad;
    for (int size = 2; size <= cap && bad.empty(); ++size) {
        for_each_subset(m.ground_size(), size, [&](const ElemSet& u) {
            if (!bad.empty() || !m.is_unidependent(u)) return;
            ElemSet c = m.unique_circuit(u);
            // unidependent subsets of u are exactly the supersets of its circuit
            for (const auto& extra : all_subsets(set_difference(u, c))) {
                ElemSet usub = set_union(c, extra);
                if (usub == u) continue;
                AlgebraElement lhs = boundary(chi, u);
                AlgebraElement rhs = multiply_monomial(beta, boundary(chi, usub), set_difference(u, usub));
                if (rhs.is_zero() || lhs.is_zero()) {
                    bad = "zero boundary at " + set_str(u);
                    return;
                }
                const auto& [s0, c0] = *rhs.terms().begin();
                Rational scale = lhs.coefficient(s0) / c0;
                if (scale == 0 || !(scale * rhs == lhs)) {
                    bad = set_str(u) + " not proportional to " + set_str(usub) + " route";
                    return;
                }
            }
        });
    }
    if (!bad.empty()) return failed(name, bad);
    return pass(name);
}

CheckResult check_circuits_reduce_to_zero(const Matroid& m, const ChiMap& chi) {
    const std::string name = "circuit-monomials-reduce-to-zero";
    Perm nat = Perm::natural(m.ground_size());
    std::map<int, std::optional<IdealReducer>> reducers;
    for (const auto& c : m.circuits()) {
        int ell = static_cast<int>(c.size());
        auto& red = reducers[ell];
        if (!red) red.emplace(m, chi, ell, nbc_sets(m, nat, ell));
        if (!red->reduce(AlgebraElement::monomial(c, 1)).empty())
            return failed(name, "e_" + set_str(c) + " has nonzero normal form");
    }
    return pass(name);
}

CheckResult check_quotient_dimensions(const Matroid& m, const ChiMap& chi) {
    const std::string name = "quotient-dimension-is-nbc-count";
    Perm nat = Perm::natural(m.ground_size());
    int cap = std::min(m.rank() + 1, m.ground_size());
    for (int ell = 0; ell <= cap; ++ell)
        if (quotient_dimension(m, chi, ell) != static_cast<int>(nbc_sets(m, nat, ell).size()))
            return failed(name, "dimension mismatch at degree " + std::to_string(ell));
    return pass(name);
}

CheckResult check_expand_consistency(const Matroid& m, const ChiMap& chi, const std::vector<Perm>& perms) {
    const std::string name = "nbc-expand-consistency";
    std::vector<Perm> orders{Perm::natural(m.ground_size())};
    if (!perms.empty()) orders.push_back(perms.front());
    for (const auto& pi : orders)
        for (int ell = 1; ell <= m.rank(); ++ell) {
            IdealReducer oracle(m, chi, ell, nbc_sets(m, pi, ell));
            for (const auto& j : independent_sets(m, ell)) {
                auto a = nbc_expand(m, chi, j, pi);
                auto b = oracle.reduce(AlgebraElement::monomial(j, 1));
                if (a != b)
                    return failed(name, "flag and oracle expansions differ at " + set_str(j) + " order " + pi.str());
            }
        }
    // the residue route through the nbc diagonal candidate must agree too
    for (int ell = 1; ell <= m.rank(); ++ell) {
        auto cand = nbc_diagonal_candidate(m, ell);
        for (const auto& j : independent_sets(m, ell)) {
            auto a = nbc_expand(m, chi, j, Perm::natural(m.ground_size()));
            std::map<ElemSet, Rational> c;
            for (const auto& entry : cand) {
                Rational r = iterated_residue(m, chi, entry.ordered_word(), j);
                if (r != 0) c.emplace(entry.set, r);
            }
            if (a != c) return failed(name, "residue expansion differs at " + set_str(j));
        }
    }
    return pass(name);
}

CheckResult check_reduced_groebner(const Matroid& m, const ChiMap& chi, const std::vector<Perm>& perms) {
    const std::string name = "reduced-groebner";
    std::vector<Perm> orders{Perm::natural(m.ground_size())};
    for (const auto& p : perms) orders.push_back(p);
    for (const auto& pi : orders) {
        TermOrder order(pi);
        GroebnerBasis g = reduced_groebner(m, chi, order);
        auto circuits = minimal_broken_circuit_circuits(m, pi);
        if (circuits.size() != g.elements.size()) return failed(name, "element count mismatch");
        for (const auto& c : circuits) {
            auto lt = leading_term(order, boundary(chi, c));
            if (lt->second != without_element(c, pi.min_of(c)))
                return failed(name, "leading monomial formula fails for circuit " + set_str(c));
        }
        for (const auto& g1 : g.elements) {
            auto lt1 = leading_term(order, g1);
            if (lt1->first != 1) return failed(name, "leading coefficient not normalized");
            for (const auto& g2 : g.elements) {
                if (&g1 == &g2) continue;
                for (const auto& [s, c] : g2.terms())
                    if (is_subset(lt1->second, s))
                        return failed(name, "term of another element divisible by lp under order " + pi.str());
            }
        }
        if (!is_groebner(m, chi, order, g.elements))
            return failed(name, "reduced basis fails the Groebner oracle for order " + pi.str());
    }
    return pass(name);
}

CheckResult check_universal_groebner(const Matroid& m, const ChiMap& chi, const std::vector<Perm>& perms) {
    const std::string name = "universal-groebner";
    GroebnerBasis u = universal_groebner(m, chi);
    std::vector<Perm> orders{Perm::natural(m.ground_size())};
    for (const auto& p : perms) orders.push_back(p);
    for (const auto& pi : orders)
        if (!is_groebner(m, chi, TermOrder(pi), u.elements))
            return failed(name, "universal basis fails for order " + pi.str());
    // minimality: dropping any circuit's boundary breaks Groebner-ness
    // for the witnessing order
    const auto& circuits = m.circuits();
    for (size_t i = 0; i < circuits.size(); ++i) {
        std::vector<AlgebraElement> rest;
        for (size_t k = 0; k < u.elements.size(); ++k)
            if (k != i) rest.push_back(u.elements[k]);
        TermOrder witness(minimality_witness(m, circuits[i]));
        if (is_groebner(m, chi, witness, rest))
            return failed(name, "basis without circuit " + set_str(circuits[i]) + " still passes");
    }
    return pass(name);
}

CheckResult check_canonical_basis_is_nbc(const Matroid& m, const ChiMap& chi, const std::vector<Perm>& perms) {
    const std::string name = "canonical-basis-equals-nbc";
    std::vector<Perm> orders{Perm::natural(m.ground_size())};
    for (const auto& p : perms) orders.push_back(p);
    for (const auto& pi : orders)
        for (int ell = 0; ell <= m.rank(); ++ell)
            if (canonical_basis(m, chi, TermOrder(pi), ell) != nbc_sets(m, pi, ell))
                return failed(name, "mismatch at degree " + std::to_string(ell) + " order " + pi.str());
    return pass(name);
}

CheckResult check_lt_pivots_match_nbc_complement(const Matroid& m, const ChiMap& chi,
                                                 const std::vector<Perm>& perms) {
    const std::string name = "lt-pivots-match-nbc-complement";
    std::vector<Perm> orders{Perm::natural(m.ground_size())};
    if (!perms.empty()) orders.push_back(perms.front());
    for (const auto& pi : orders) {
        TermOrder order(pi);
        int cap = std::min(m.rank() + 1, m.ground_size());
        for (int ell = 0; ell <= cap; ++ell) {
            auto pivots = ideal_leading_monomials(m, chi, order, ell);
            auto nbc = nbc_sets(m, pi, ell);
            std::vector<ElemSet> complement;
            for_each_subset(m.ground_size(), ell, [&](const ElemSet& s) {
                if (!std::binary_search(nbc.begin(), nbc.end(), s)) complement.push_back(s);
            });
            if (pivots != complement)
                return failed(name, "pivot set differs at degree " + std::to_string(ell));
        }
    }
    return pass(name);
}

CheckResult check_residue_value_independence(const Matroid& m, const ChiMap& chi, int max_ell) {
    const std::string name = "residue-value-independence";
    int cap = std::min(max_ell, m.rank());
    for (int ell = 1; ell <= cap; ++ell) {
        auto independents = independent_sets(m, ell);
        for (const auto& i : independents)
            for (const auto& j : independents) {
                std::optional<Rational> value;
                for (const auto& w : all_orderings(i)) {
                    Rational r = iterated_residue(m, chi, w, j);
                    if (r == 0) continue;
                    if (!value) value = r;
                    else if (*value != r)
                        return failed(name, "values differ for " + set_str(i) + " on " + set_str(j));
                }
            }
    }
    return pass(name);
}

CheckResult check_flag_criterion(const Matroid& m, const ChiMap& chi, int max_ell) {
    const std::string name = "flag-criterion";
    int cap = std::min(max_ell, m.rank());
    for (int ell = 1; ell <= cap; ++ell) {
        auto independents = independent_sets(m, ell);
        for (const auto& i : independents)
            for (const auto& w : all_orderings(i)) {
                FlagChain fl = flag(m, w);
                for (const auto& j : independents) {
                    Rational composed = iterated_residue(m, chi, w, j);
                    auto jw = match_flag(m, j, fl);
                    Rational closed = jw ? chi(w) / chi(*jw) : Rational(0);
                    if (composed != closed)
                        return failed(name, "composed and closed values differ for " + set_str(i) + " on " +
                                                set_str(j));
                }
            }
    }
    return pass(name);
}

CheckResult check_exact_sequences(const Matroid& m, const ChiMap& chi) {
    const std::string name = "exact-sequence";
    if (!m.is_simple()) return skipped(name, "matroid is not simple");
    for (int x = 1; x <= m.ground_size(); ++x) {
        auto report = exact_sequence_check(m, chi, x);
        if (!report.ok()) {
            std::ostringstream os;
            os << "fails at element " << x << " (dims " << report.dims_ok << ", partition "
               << report.partition_ok << ", proj-after-inc " << report.proj_after_inc_zero << ", section "
               << report.section_identity << ")";
            return failed(name, os.str());
        }
    }
    return pass(name);
}

CheckResult check_nbc_diagonal(const Matroid& m, const ChiMap& chi) {
    const std::string name = "nbc-diagonal-dual-pairing";
    for (int ell = 1; ell <= m.rank(); ++ell) {
        auto cand = nbc_diagonal_candidate(m, ell);
        if (cand.empty()) continue;
        if (!is_diagonal_basis(m, cand))
            return failed(name, "nbc candidate not diagonal at degree " + std::to_string(ell));
        auto mat = dual_pairing_matrix(m, chi, cand);
        for (size_t r = 0; r < mat.size(); ++r)
            for (size_t c = 0; c < mat.size(); ++c)
                if (mat[r][c] != Rational(r == c ? 1 : 0))
                    return failed(name, "pairing not identity at degree " + std::to_string(ell));
    }
    return pass(name);
}

CheckResult check_contracted_chi_axioms(const Matroid& m, const ChiMap& chi, const BetaSystem& beta) {
    const std::string name = "contracted-chi-axioms";
    if (beta.mode() == BetaSystem::Mode::Custom) return skipped(name, "custom beta not relabeled");
    for (int x = 1; x <= m.ground_size(); ++x) {
        if (m.is_loop(x)) continue;
        Minor con = contraction(m, x);
        ChiMap chi_c = chi_contract(chi, x);
        auto support = check_chi_support(con.matroid, chi_c);
        if (!support.pass) return failed(name, "support axiom fails after contracting " + std::to_string(x));
        auto prop = check_axiom_proportionality(con.matroid, chi_c, beta, 4);
        if (!prop.pass) return failed(name, "proportionality fails after contracting " + std::to_string(x));
    }
    return pass(name);
}

CheckResult check_ot_alternating_sum(const Instance& inst) {
    const std::string name = "ot-affine-alternating-sum";
    if (inst.chi.kind() != ChiMap::Kind::OT) return skipped(name, "chi is not the determinant map");
    if (!inst.vectors || !inst.vectors->affine_normalized())
        return skipped(name, "configuration is not affine-normalized");
    // the terms of a unidependent's boundary share one flat, which is
    // what makes the duplicated-ones-row determinant argument work
    const Matroid& m = inst.matroid;
    for (int k = 2; k <= std::min(m.rank() + 1, m.ground_size()); ++k) {
        bool ok = true;
        for_each_subset(m.ground_size(), k, [&](const ElemSet& u) {
            if (!m.is_unidependent(u)) return;
            Rational sum = 0;
            for (size_t p = 0; p < u.size(); ++p) {
                Word rest;
                for (size_t q = 0; q < u.size(); ++q)
                    if (q != p) rest.push_back(u[q]);
                Rational c = inst.chi(rest);
                sum += (p % 2 == 0) ? -c : c;
            }
            if (sum != 0) ok = false;
        });
        if (!ok) return failed(name, "alternating sum nonzero at size " + std::to_string(k));
    }
    return pass(name);
}

CheckResult check_residue_sum_one(const Instance& inst) {
    const std::string name = "ot-residue-sum-one";
    if (inst.chi.kind() != ChiMap::Kind::OT) return skipped(name, "chi is not the determinant map");
    if (!inst.vectors || !inst.vectors->affine_normalized())
        return skipped(name, "configuration is not affine-normalized");
    const Matroid& m = inst.matroid;
    for (int ell = 1; ell <= m.rank(); ++ell) {
        auto cand = nbc_diagonal_candidate(m, ell);
        if (cand.empty()) continue;
        for (const auto& j : independent_sets(m, ell)) {
            Rational sum = 0;
            for (const auto& entry : cand) sum += iterated_residue(m, inst.chi, entry.ordered_word(), j);
            if (sum != 1)
                return failed(name, "sum " + rational_str(sum) + " at " + set_str(j) + " degree " +
                                        std::to_string(ell));
        }
    }
    return pass(name);
}

std::vector<CheckResult> run_invariant_suite(const Instance& inst, const VerifyOptions& opts) {
    const Matroid& m = inst.matroid;
    auto perms = random_perms(m.ground_size(), opts.random_perms, opts.seed);
    auto canon = random_perms(m.ground_size(), opts.canonical_perms, opts.seed + 1);

    std::vector<CheckResult> out;
    out.push_back(check_matroid_axioms(m));
    out.push_back(check_closure_rank(m));
    out.push_back(check_minors_valid(m));
    out.push_back(check_nbc_permutation_invariance(m, perms));
    out.push_back(check_dimension_identity(m, perms));
    out.push_back(check_chi_antisymmetry(m, inst.chi));
    out.push_back(check_chi_support(m, inst.chi));
    if (m.loop_free()) {
        out.push_back(check_axiom_proportionality(m, inst.chi, inst.beta));
        out.push_back(check_circuits_reduce_to_zero(m, inst.chi));
        out.push_back(check_quotient_dimensions(m, inst.chi));
        out.push_back(check_expand_consistency(m, inst.chi, perms));
        out.push_back(check_reduced_groebner(m, inst.chi, perms));
        out.push_back(check_universal_groebner(m, inst.chi, perms));
        out.push_back(check_canonical_basis_is_nbc(m, inst.chi, canon));
        out.push_back(check_lt_pivots_match_nbc_complement(m, inst.chi, perms));
        out.push_back(check_residue_value_independence(m, inst.chi));
        out.push_back(check_flag_criterion(m, inst.chi));
        out.push_back(check_exact_sequences(m, inst.chi));
        out.push_back(check_nbc_diagonal(m, inst.chi));
        out.push_back(check_contracted_chi_axioms(m, inst.chi, inst.beta));
    }
    out.push_back(check_ot_alternating_sum(inst));
    out.push_back(check_residue_sum_one(inst));
    return out;
}

} // namespace chios
