#ifndef CHIOS_VERIFY_HPP
#define CHIOS_VERIFY_HPP

#include "chios/algebra.hpp"
#include "chios/chi.hpp"
#include "chios/groebner.hpp"
#include "chios/matroid.hpp"
#include "chios/residues.hpp"
#include "chios/vector_config.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chios {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// A matroid with its χ-algebra data, ready for the invariant suite.
struct Instance {
    Matroid matroid;
    std::optional<VectorConfig> vectors;
    ChiMap chi;
    BetaSystem beta;
};

struct VerifyOptions {
    unsigned seed = 20240901;
    int random_perms = 3;    // permutation-invariance samples
    int canonical_perms = 5; // canonical-basis-vs-nbc samples
};

std::vector<Perm> random_perms(int n, int count, unsigned seed);

// Individual properties; each returns a pass/fail with a short detail on
// failure. They are grouped by the module whose contract they check.
CheckResult check_matroid_axioms(const Matroid& m);
CheckResult check_closure_rank(const Matroid& m);
CheckResult check_minors_valid(const Matroid& m);
CheckResult check_nbc_permutation_invariance(const Matroid& m, const std::vector<Perm>& perms);
CheckResult check_dimension_identity(const Matroid& m, const std::vector<Perm>& perms);

CheckResult check_chi_antisymmetry(const Matroid& m, const ChiMap& chi);
CheckResult check_chi_support(const Matroid& m, const ChiMap& chi);

CheckResult check_axiom_proportionality(const Matroid& m, const ChiMap& chi, const BetaSystem& beta,
                                        int max_unidependent_size = 5);
CheckResult check_circuits_reduce_to_zero(const Matroid& m, const ChiMap& chi);
CheckResult check_quotient_dimensions(const Matroid& m, const ChiMap& chi);
CheckResult check_expand_consistency(const Matroid& m, const ChiMap& chi, const std::vector<Perm>& perms);

CheckResult check_reduced_groebner(const Matroid& m, const ChiMap& chi, const std::vector<Perm>& perms);
CheckResult check_universal_groebner(const Matroid& m, const ChiMap& chi, const std::vector<Perm>& perms);
CheckResult check_canonical_basis_is_nbc(const Matroid& m, const ChiMap& chi, const std::vector<Perm>& perms);
CheckResult check_lt_pivots_match_nbc_complement(const Matroid& m, const ChiMap& chi,
                                                 const std::vector<Perm>& perms);

CheckResult check_residue_value_independence(const Matroid& m, const ChiMap& chi, int max_ell = 3);
CheckResult check_flag_criterion(const Matroid& m, const ChiMap& chi, int max_ell = 3);
CheckResult check_exact_sequences(const Matroid& m, const ChiMap& chi);
CheckResult check_nbc_diagonal(const Matroid& m, const ChiMap& chi);
CheckResult check_contracted_chi_axioms(const Matroid& m, const ChiMap& chi, const BetaSystem& beta);

// affine OT properties; skipped (reported as passing with a note) when
// the instance has no vectors or is not affine-normalized
CheckResult check_ot_alternating_sum(const Instance& inst);
CheckResult check_residue_sum_one(const Instance& inst);

/// Everything above in a fixed order.
std::vector<CheckResult> run_invariant_suite(const Instance& inst, const VerifyOptions& opts);

} // namespace chios

#endif
