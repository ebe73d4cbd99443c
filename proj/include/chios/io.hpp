#ifndef CHIOS_IO_HPP
#define CHIOS_IO_HPP

#include "chios/algebra.hpp"
#include "chios/matroid.hpp"
#include "chios/perm.hpp"
#include "chios/residues.hpp"
#include "chios/vector_config.hpp"

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

namespace chios {

using OrderedJson = nlohmann::ordered_json;

/// Circuit-list text format: first line "n k", then k lines of
/// space-separated circuits. '#' starts a comment. Errors carry the
/// source name and line number.
std::pair<int, std::vector<ElemSet>> parse_circuit_list(std::istream& in, const std::string& source);
std::pair<int, std::vector<ElemSet>> parse_circuit_list_file(const std::string& path);

/// Vector-config text format: first line "n d", then n lines of d
/// rationals written as "p/q" or integers.
VectorConfig parse_vector_config(std::istream& in, const std::string& source);
VectorConfig parse_vector_config_file(const std::string& path);

/// Flat-basis JSON: {"flats":[{"flat":[...],"basis":[["p/q",...],...]}]}.
std::map<ElemSet, std::vector<RatVec>> parse_flat_basis_file(const std::string& path);

/// Diagonal-basis candidate JSON:
/// {"entries":[{"set":[...],"sigma":[...]}]} with sigma optional (id).
DiagonalBasisCandidate parse_candidate_file(const std::string& path);

/// Custom chi JSON: {"values":[{"set":[...],"value":"p/q"}]}.
std::map<ElemSet, Rational> parse_chi_table_file(const std::string& path);

/// "natural" or "pi:2,3,4,5,6,1" (elements smallest-first).
Perm parse_order_spec(const std::string& spec, int n);

/// "id", "cycle:1,3,2" (a cycle on positions) or "word:3,1,2" (images).
std::vector<int> parse_sigma_spec(const std::string& spec, int ell);

/// Comma-separated elements, e.g. "1,5,6".
ElemSet parse_set_spec(const std::string& spec);
Word parse_word_spec(const std::string& spec);

// rendering
std::string monomial_str(const ElemSet& support);          // e_{1,2,5}, "1" when empty
std::string element_str(const AlgebraElement& f);          // "3/2 e_{1,2,5} - 1/2 e_{1,2,6}"
std::string coefficient_map_str(const std::map<ElemSet, Rational>& coefs);

OrderedJson element_to_json(const AlgebraElement& f);
AlgebraElement element_from_json(const OrderedJson& j);
OrderedJson rational_to_json(const Rational& r); // {"num":"..","den":".."}
OrderedJson coefficient_map_to_json(const std::map<ElemSet, Rational>& coefs);

} // namespace chios

#endif
