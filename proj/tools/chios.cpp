// Command-line front end: loads a vector configuration or circuit list,
// builds the requested chi-algebra, and answers the computational verbs
// with deterministic text or JSON reports.

#include "chios/algebra.hpp"
#include "chios/errors.hpp"
#include "chios/groebner.hpp"
#include "chios/io.hpp"
#include "chios/residues.hpp"
#include "chios/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace chios;

struct Session {
    Matroid matroid = Matroid::from_circuits(0, {});
    std::optional<VectorConfig> vectors;
    ChiMap chi;
    BetaSystem beta = BetaSystem::exterior();
    Perm order = Perm::natural(0);
    std::string chi_name = "os";
    bool json = false;
};

struct Options {
    std::string input;
    std::string kind = "auto";
    std::string chi = "os";
    std::string beta = "auto";
    std::string order = "natural";
    std::string flat_basis = "lex";
    std::string format = "text";
};

std::string infer_kind(const Options& opt) {
    if (opt.kind != "auto") return opt.kind;
    if (opt.input.size() >= 4 && opt.input.substr(opt.input.size() - 4) == ".vec") return "vectors";
    if (opt.input.size() >= 5 && opt.input.substr(opt.input.size() - 5) == ".circ") return "circuits";
    fail(ErrorKind::ParseError, "cannot infer input kind from '" + opt.input + "'; pass --kind");
}

long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Session make_session(const Options& opt) {
    Session s;
    std::string kind = infer_kind(opt);
    if (kind == "vectors") {
        s.vectors = parse_vector_config_file(opt.input);
        s.matroid = circuits_from_vectors(*s.vectors);
    } else if (kind == "circuits") {
        auto [n, circuits] = parse_circuit_list_file(opt.input);
        s.matroid = Matroid::from_circuits(n, std::move(circuits));
    } else {
        fail(ErrorKind::ParseError, "unknown input kind '" + kind + "'");
    }

    FlatBasisAssignment basis = FlatBasisAssignment::lex_default();
    if (opt.flat_basis != "lex") {
        if (opt.flat_basis.rfind("file:", 0) != 0)
            fail(ErrorKind::ParseError, "--flat-basis must be 'lex' or 'file:<path>'");
        basis = FlatBasisAssignment::from_table(parse_flat_basis_file(opt.flat_basis.substr(5)));
    }

    s.chi_name = opt.chi;
    if (opt.chi == "os") {
        s.chi = chi_os(s.matroid);
    } else if (opt.chi == "ot" || opt.chi == "cordovil") {
        if (!s.vectors)
            fail(ErrorKind::ValidationError, "--chi " + opt.chi + " needs vector input");
        s.chi = (opt.chi == "ot") ? chi_ot(*s.vectors, s.matroid, basis)
                                  : chi_cordovil(*s.vectors, s.matroid, basis);
    } else if (opt.chi.rfind("custom:", 0) == 0) {
        s.chi = chi_custom(s.matroid, parse_chi_table_file(opt.chi.substr(7)));
        s.chi_name = "custom";
    } else {
        fail(ErrorKind::ParseError, "--chi must be os, ot, cordovil or custom:<path>");
    }

    std::string beta = opt.beta;
    if (beta == "auto") beta = (opt.chi == "os") ? "exterior" : "commutative";
    if (beta == "exterior") s.beta = BetaSystem::exterior();
    else if (beta == "commutative") s.beta = BetaSystem::commutative();
    else fail(ErrorKind::ParseError, "--beta must be exterior or commutative");

    s.order = parse_order_spec(opt.order, s.matroid.ground_size());
    s.json = (opt.format == "json");
    if (opt.format != "text" && opt.format != "json")
        fail(ErrorKind::ParseError, "--format must be text or json");
    return s;
}

void emit(const Session& s, const OrderedJson& report, const std::string& text) {
    if (s.json) std::cout << report.dump(2) << "\n";
    else std::cout << text;
}

OrderedJson sets_json(const std::vector<ElemSet>& sets) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& s : sets) arr.push_back(s);
    return arr;
}

std::string sets_line(const std::vector<ElemSet>& sets) {
    std::string out;
    for (size_t i = 0; i < sets.size(); ++i) {
        if (i) out += " ";
        out += set_str(sets[i]);
    }
    return out;
}

int run_nbc(Session& s, int degree) {
    OrderedJson rep{{"verb", "nbc"}, {"order", s.order.str()}};
    OrderedJson degrees = OrderedJson::array();
    std::string text;
    int lo = degree >= 0 ? degree : 0;
    int hi = degree >= 0 ? degree : s.matroid.rank();
    for (int ell = lo; ell <= hi; ++ell) {
        auto sets = nbc_sets(s.matroid, s.order, ell);
        degrees.push_back(OrderedJson{{"ell", ell}, {"count", sets.size()}, {"sets", sets_json(sets)}});
        text += "nbc_" + std::to_string(ell) + " (" + std::to_string(sets.size())
              + "): " + sets_line(sets) + "\n";
    }
    rep["degrees"] = std::move(degrees);
    emit(s, rep, text);
    return 0;
}

int run_groebner(Session& s, bool universal) {
    TermOrder order(s.order);
    GroebnerBasis g = universal ? universal_groebner(s.matroid, s.chi)
                                : reduced_groebner(s.matroid, s.chi, order);
    OrderedJson rep{{"verb", "groebner"},
                    {"kind", universal ? "universal" : "reduced"},
                    {"order", s.order.str()}};
    OrderedJson elems = OrderedJson::array();
    OrderedJson lps = OrderedJson::array();
    std::string text = std::string(universal ? "universal" : "reduced") + " Groebner basis ("
                     + std::to_string(g.elements.size()) + " elements), order " + s.order.str() + "\n";
    for (const auto& e : g.elements) {
        elems.push_back(element_to_json(e));
        auto lt = leading_term(order, e);
        lps.push_back(lt->second);
        text += "  " + element_str(e) + "   [lp " + monomial_str(lt->second) + "]\n";
    }
    rep["elements"] = std::move(elems);
    rep["leading_monomials"] = std::move(lps);
    emit(s, rep, text);
    return 0;
}

int run_lt_ideal(Session& s) {
    TermOrder order(s.order);
    auto lt = leading_term_ideal(order, universal_groebner(s.matroid, s.chi));
    OrderedJson rep{{"verb", "lt-ideal"}, {"order", s.order.str()}, {"generators", sets_json(lt.generators)}};
    std::string text = "Lt ideal generators (" + std::to_string(lt.generators.size()) + "):";
    for (const auto& g : lt.generators) text += " " + monomial_str(g);
    emit(s, rep, text + "\n");
    return 0;
}

int run_canonical(Session& s, int degree) {
    auto sets = canonical_basis(s.matroid, s.chi, TermOrder(s.order), degree);
    OrderedJson rep{{"verb", "canonical-basis"},
                    {"order", s.order.str()},
                    {"ell", degree},
                    {"monomials", sets_json(sets)}};
    std::string text = "canonical basis, degree " + std::to_string(degree) + " ("
                     + std::to_string(sets.size()) + "):";
    for (const auto& m : sets) text += " " + monomial_str(m);
    emit(s, rep, text + "\n");
    return 0;
}

int run_expand(Session& s, const std::string& target, const std::string& basis_spec) {
    ElemSet j = parse_set_spec(target);
    std::map<ElemSet, Rational> coefs;
    bool oracle_agrees = false;
    std::string basis_name;
    if (basis_spec == "nbc") {
        basis_name = "nbc";
        coefs = nbc_expand(s.matroid, s.chi, j, s.order);
        oracle_agrees = (coefs == nbc_expand_oracle(s.matroid, s.chi, j, s.order));
    } else if (basis_spec.rfind("file:", 0) == 0) {
        basis_name = basis_spec;
        auto cand = parse_candidate_file(basis_spec.substr(5));
        coefs = expand_in_diagonal_basis(s.matroid, s.chi, cand, j);
        std::vector<ElemSet> sets;
        for (const auto& e : cand) sets.push_back(e.set);
        oracle_agrees = (coefs == expand_over_sets_oracle(s.matroid, s.chi, j, sets));
    } else {
        fail(ErrorKind::ParseError, "--basis must be 'nbc' or 'file:<path>'");
    }
    OrderedJson rep{{"verb", "expand"},
                    {"chi", s.chi_name},
                    {"order", s.order.str()},
                    {"basis", basis_name},
                    {"target", j},
                    {"coefficients", coefficient_map_to_json(coefs)},
                    {"oracle_agrees", oracle_agrees}};
    std::string text = monomial_str(j) + " = " + coefficient_map_str(coefs)
                     + (oracle_agrees ? "   [oracle agrees]\n" : "   [ORACLE DISAGREES]\n");
    emit(s, rep, text);
    return oracle_agrees ? 0 : 1;
}

int run_residue(Session& s, const std::string& word_spec, const std::string& sigma_spec,
                const std::string& target) {
    Word base = parse_word_spec(word_spec);
    auto sigma = parse_sigma_spec(sigma_spec, static_cast<int>(base.size()));
    Word w(base.size());
    for (size_t k = 0; k < base.size(); ++k) w[k] = base[static_cast<size_t>(sigma[k] - 1)];
    ElemSet j = parse_set_spec(target);
    Rational value = iterated_residue(s.matroid, s.chi, w, j);
    OrderedJson rep{{"verb", "residue"}, {"chi", s.chi_name}, {"word", w}, {"target", j},
                    {"value", rational_to_json(value)}};
    std::string text = "residue of " + monomial_str(j) + " along word (";
    for (size_t k = 0; k < w.size(); ++k) text += (k ? "," : "") + std::to_string(w[k]);
    text += ") = " + rational_str(value) + "\n";
    emit(s, rep, text);
    return 0;
}

int run_diagonal_check(Session& s, const std::string& file) {
    auto cand = parse_candidate_file(file);
    bool diag = is_diagonal_basis(s.matroid, cand);
    bool pairing = false;
    if (diag) {
        auto mat = dual_pairing_matrix(s.matroid, s.chi, cand);
        pairing = true;
        for (size_t r = 0; r < mat.size(); ++r)
            for (size_t c = 0; c < mat.size(); ++c)
                if (mat[r][c] != Rational(r == c ? 1 : 0)) pairing = false;
    }
    int ell = static_cast<int>(cand.front().set.size());
    int dim = static_cast<int>(nbc_sets(s.matroid, Perm::natural(s.matroid.ground_size()), ell).size());
    OrderedJson rep{{"verb", "diagonal-check"}, {"size", cand.size()}, {"dim", dim},
                    {"is_diagonal", diag},     {"pairing_identity", pairing}};
    std::string text = "candidate of size " + std::to_string(cand.size()) + ", dim " + std::to_string(dim)
                     + ": " + (diag ? "diagonal" : "NOT diagonal")
                     + (diag ? (pairing ? ", dual pairing is the identity" : ", PAIRING NOT IDENTITY") : "")
                     + "\n";
    emit(s, rep, text);
    return diag && pairing ? 0 : 1;
}

int run_exact_seq(Session& s, int element) {
    auto report = exact_sequence_check(s.matroid, s.chi, element);
    OrderedJson rows = OrderedJson::array();
    std::string text = "exact sequence through element " + std::to_string(element) + "\n";
    for (const auto& r : report.rows) {
        rows.push_back(OrderedJson{{"ell", r.ell},
                                   {"dim", r.dim_full},
                                   {"dim_deletion", r.dim_deletion},
                                   {"dim_contraction", r.dim_contraction}});
        text += "  ell=" + std::to_string(r.ell) + ": " + std::to_string(r.dim_full) + " = "
              + std::to_string(r.dim_deletion) + " + " + std::to_string(r.dim_contraction) + "\n";
    }
    OrderedJson rep{{"verb", "exact-seq"},
                    {"element", element},
                    {"rows", std::move(rows)},
                    {"dims", report.dims_ok},
                    {"partition", report.partition_ok},
                    {"proj_after_inc_zero", report.proj_after_inc_zero},
                    {"section_identity", report.section_identity},
                    {"ok", report.ok()}};
    text += std::string("  partition ") + (report.partition_ok ? "ok" : "FAIL")
          + ", projection after inclusion " + (report.proj_after_inc_zero ? "ok" : "FAIL") + ", section "
          + (report.section_identity ? "ok" : "FAIL") + "\n";
    emit(s, rep, text);
    return report.ok() ? 0 : 1;
}

int run_dims(Session& s) {
    const Matroid& m = s.matroid;
    OrderedJson rows = OrderedJson::array();
    std::string text;
    int cap = std::min(m.ground_size(), m.rank() + 1);
    for (int ell = 0; ell <= cap; ++ell) {
        long long nbc = static_cast<long long>(nbc_sets(m, s.order, ell).size());
        long long uni = static_cast<long long>(inactive_unidependents(m, ell + 1, s.order).size());
        long long dep = static_cast<long long>(dependent_sets(m, ell).size());
        long long total = nbc + uni + dep;
        long long expected = binom_ll(m.ground_size(), ell);
        rows.push_back(OrderedJson{{"ell", ell}, {"nbc", nbc}, {"duni", uni}, {"dep", dep},
                                   {"total", total}, {"binom", expected}, {"ok", total == expected}});
        text += "ell=" + std::to_string(ell) + ": " + std::to_string(nbc) + "+" + std::to_string(uni) + "+"
              + std::to_string(dep) + "=" + std::to_string(total) + " (C(" + std::to_string(m.ground_size())
              + "," + std::to_string(ell) + ")=" + std::to_string(expected) + ") "
              + (total == expected ? "ok" : "FAIL") + "\n";
    }
    emit(s, OrderedJson{{"verb", "dims"}, {"order", s.order.str()}, {"rows", std::move(rows)}}, text);
    return 0;
}

int run_verify(Session& s) {
    VerifyOptions opts;
    if (const char* env = std::getenv("CHIOS_SEED")) opts.seed = static_cast<unsigned>(std::stoul(env));
    Instance inst{s.matroid, s.vectors, s.chi, s.beta};
    auto results = run_invariant_suite(inst, opts);
    OrderedJson checks = OrderedJson::array();
    std::string text;
    bool all = true;
    for (const auto& r : results) {
        checks.push_back(OrderedJson{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        text += std::string(r.pass ? "PASS" : "FAIL") + " " + r.name
              + (r.detail.empty() ? "" : " (" + r.detail + ")") + "\n";
        all = all && r.pass;
    }
    emit(s, OrderedJson{{"verb", "verify"}, {"checks", std::move(checks)}, {"all_pass", all}}, text);
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic chi-algebras of matroids: Groebner, nbc and diagonal bases, residues"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--input", opt.input, "vector-config (.vec) or circuit-list (.circ) file")->required();
    app.add_option("--kind", opt.kind, "input kind: vectors|circuits (default: by extension)");
    app.add_option("--chi", opt.chi, "chi map: os|ot|cordovil|custom:<path> (default os)");
    app.add_option("--beta", opt.beta, "commutation scalars: exterior|commutative (default by chi)");
    app.add_option("--order", opt.order, "term order: natural|pi:<comma-separated elements>");
    app.add_option("--flat-basis", opt.flat_basis, "flat basis assignment: lex|file:<path>");
    app.add_option("--format", opt.format, "output format: text|json");

    int nbc_degree = -1;
    auto* nbc_cmd = app.add_subcommand("nbc", "no-broken-circuit sets per degree");
    nbc_cmd->add_option("--degree", nbc_degree, "single degree (default: all)");

    bool universal = false, reduced = false;
    auto* gb_cmd = app.add_subcommand("groebner", "Groebner basis of the boundary ideal");
    gb_cmd->add_flag("--universal", universal, "universal basis (all circuit boundaries)");
    gb_cmd->add_flag("--reduced", reduced, "reduced basis for the selected order (default)");

    auto* lt_cmd = app.add_subcommand("lt-ideal", "leading-term ideal of the universal basis");

    int canon_degree = 0;
    auto* canon_cmd = app.add_subcommand("canonical-basis", "standard monomials of a degree");
    canon_cmd->add_option("--degree", canon_degree, "degree")->required();

    std::string expand_target, expand_basis = "nbc";
    auto* expand_cmd = app.add_subcommand("expand", "expand a pure element in a basis");
    expand_cmd->add_option("--target", expand_target, "independent set, e.g. 1,5,6")->required();
    expand_cmd->add_option("--basis", expand_basis, "nbc|file:<candidate.json>");

    std::string res_word, res_sigma = "id", res_target;
    auto* res_cmd = app.add_subcommand("residue", "iterated residue of a pure element");
    res_cmd->add_option("--word", res_word, "independent set, e.g. 1,2,5")->required();
    res_cmd->add_option("--sigma", res_sigma, "ordering: id|cycle:<positions>|word:<images>");
    res_cmd->add_option("--target", res_target, "independent set, e.g. 2,3,5")->required();

    std::string diag_file;
    auto* diag_cmd = app.add_subcommand("diagonal-check", "verify a diagonal-basis candidate");
    diag_cmd->add_option("--file", diag_file, "candidate JSON file")->required();

    int seq_element = 0;
    auto* seq_cmd = app.add_subcommand("exact-seq", "split exact sequence through an element");
    seq_cmd->add_option("--element", seq_element, "ground-set element")->required();

    auto* dims_cmd = app.add_subcommand("dims", "degreewise dimension identities");
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Session session = make_session(opt);
        if (*nbc_cmd) return run_nbc(session, nbc_degree);
        if (*gb_cmd) {
            if (universal && reduced)
                fail(ErrorKind::ParseError, "--reduced and --universal are mutually exclusive");
            return run_groebner(session, universal);
        }
        if (*lt_cmd) return run_lt_ideal(session);
        if (*canon_cmd) return run_canonical(session, canon_degree);
        if (*expand_cmd) return run_expand(session, expand_target, expand_basis);
        if (*res_cmd) return run_residue(session, res_word, res_sigma, res_target);
        if (*diag_cmd) return run_diagonal_check(session, diag_file);
        if (*seq_cmd) return run_exact_seq(session, seq_element);
        if (*dims_cmd) return run_dims(session);
        if (*verify_cmd) return run_verify(session);
    } catch (const chios::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == chios::ErrorKind::ParseError ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
