#include "chios/io.hpp"

#include "chios/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace chios {

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& message) {
    fail(ErrorKind::ParseError, source + ":" + std::to_string(line) + ": " + message);
}

// strips comments and surrounding whitespace; empty result means skip
std::string clean_line(const std::string& raw) {
    std::string s = raw;
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

int parse_int_token(const std::string& token, const std::string& source, int line) {
    try {
        size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        parse_fail(source, line, "expected an integer, got '" + token + "'");
    }
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

nlohmann::ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    try {
        return nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::ParseError, path + ": " + e.what());
    }
}

ElemSet set_from_json(const nlohmann::ordered_json& j, const std::string& where) {
    if (!j.is_array()) fail(ErrorKind::ParseError, where + ": expected an array of elements");
    ElemSet s;
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail(ErrorKind::ParseError, where + ": elements must be integers");
        s.push_back(v.get<int>());
    }
    return sorted_set(std::move(s));
}

} // namespace

std::pair<int, std::vector<ElemSet>> parse_circuit_list(std::istream& in, const std::string& source) {
    std::string raw;
    int lineno = 0;
    int n = -1, k = -1;
    std::vector<ElemSet> circuits;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = clean_line(raw);
        if (s.empty()) continue;
        auto tokens = split_ws(s);
        if (n < 0) {
            if (tokens.size() != 2) parse_fail(source, lineno, "header must be 'n k'");
            n = parse_int_token(tokens[0], source, lineno);
            k = parse_int_token(tokens[1], source, lineno);
            if (n < 0 || k < 0) parse_fail(source, lineno, "negative header values");
            continue;
        }
        ElemSet c;
        for (const auto& t : tokens) c.push_back(parse_int_token(t, source, lineno));
        try {
            circuits.push_back(sorted_set(std::move(c)));
        } catch (const Error&) {
            parse_fail(source, lineno, "repeated element in circuit");
        }
    }
    if (n < 0) fail(ErrorKind::ParseError, source + ": missing header line");
    if (static_cast<int>(circuits.size()) != k)
        fail(ErrorKind::ParseError,
             source + ": header announces " + std::to_string(k) + " circuits, found " +
                 std::to_string(circuits.size()));
    return {n, std::move(circuits)};
}

std::pair<int, std::vector<ElemSet>> parse_circuit_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    return parse_circuit_list(in, path);
}

VectorConfig parse_vector_config(std::istream& in, const std::string& source) {
    std::string raw;
    int lineno = 0;
    int n = -1, d = -1;
    VectorConfig cfg;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = clean_line(raw);
        if (s.empty()) continue;
        auto tokens = split_ws(s);
        if (n < 0) {
            if (tokens.size() != 2) parse_fail(source, lineno, "header must be 'n d'");
            n = parse_int_token(tokens[0], source, lineno);
            d = parse_int_token(tokens[1], source, lineno);
            if (n < 0 || d <= 0) parse_fail(source, lineno, "bad header values");
            cfg.d = d;
            continue;
        }
        if (static_cast<int>(tokens.size()) != d)
            parse_fail(source, lineno,
                       "expected " + std::to_string(d) + " coordinates, got " + std::to_string(tokens.size()));
        RatVec v;
        for (const auto& t : tokens) {
            try {
                v.push_back(parse_rational(t));
            } catch (const Error& e) {
                parse_fail(source, lineno, e.what());
            }
        }
        cfg.vectors.push_back(std::move(v));
    }
    if (n < 0) fail(ErrorKind::ParseError, source + ": missing header line");
    if (static_cast<int>(cfg.vectors.size()) != n)
        fail(ErrorKind::ParseError,
             source + ": header announces " + std::to_string(n) + " vectors, found " +
                 std::to_string(cfg.vectors.size()));
    return cfg;
}

VectorConfig parse_vector_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    return parse_vector_config(in, path);
}

std::map<ElemSet, std::vector<RatVec>> parse_flat_basis_file(const std::string& path) {
    auto j = load_json_file(path);
    if (!j.contains("flats") || !j["flats"].is_array())
        fail(ErrorKind::ParseError, path + ": expected top-level 'flats' array");
    std::map<ElemSet, std::vector<RatVec>> out;
    for (const auto& entry : j["flats"]) {
        ElemSet flat = set_from_json(entry.at("flat"), path);
        std::vector<RatVec> basis;
        for (const auto& vec : entry.at("basis")) {
            RatVec v;
            for (const auto& coord : vec) v.push_back(parse_rational(coord.get<std::string>()));
            basis.push_back(std::move(v));
        }
        out[flat] = std::move(basis);
    }
    return out;
}

DiagonalBasisCandidate parse_candidate_file(const std::string& path) {
    auto j = load_json_file(path);
    if (!j.contains("entries") || !j["entries"].is_array())
        fail(ErrorKind::ParseError, path + ": expected top-level 'entries' array");
    DiagonalBasisCandidate cand;
    for (const auto& entry : j["entries"]) {
        ElemSet s = set_from_json(entry.at("set"), path);
        DiagonalEntry e = diagonal_entry_identity(s);
        if (entry.contains("sigma")) {
            e.sigma.clear();
            for (const auto& v : entry["sigma"]) e.sigma.push_back(v.get<int>());
        }
        cand.push_back(std::move(e));
    }
    return cand;
}

std::map<ElemSet, Rational> parse_chi_table_file(const std::string& path) {
    auto j = load_json_file(path);
    if (!j.contains("values") || !j["values"].is_array())
        fail(ErrorKind::ParseError, path + ": expected top-level 'values' array");
    std::map<ElemSet, Rational> out;
    for (const auto& entry : j["values"]) {
        ElemSet s = set_from_json(entry.at("set"), path);
        out[s] = parse_rational(entry.at("value").get<std::string>());
    }
    return out;
}

Perm parse_order_spec(const std::string& spec, int n) {
    if (spec == "natural") return Perm::natural(n);
    const std::string prefix = "pi:";
    if (spec.rfind(prefix, 0) != 0)
        fail(ErrorKind::ParseError, "order must be 'natural' or 'pi:<comma-separated elements>'");
    std::vector<int> order;
    for (const auto& t : split_on(spec.substr(prefix.size()), ','))
        order.push_back(parse_int_token(t, "order spec", 1));
    if (static_cast<int>(order.size()) != n)
        fail(ErrorKind::ParseError, "order lists " + std::to_string(order.size()) + " elements, ground set has " +
                                        std::to_string(n));
    try {
        return Perm(std::move(order));
    } catch (const Error& e) {
        fail(ErrorKind::ParseError, e.what());
    }
}

std::vector<int> parse_sigma_spec(const std::string& spec, int ell) {
    std::vector<int> sigma(static_cast<size_t>(ell));
    for (int i = 0; i < ell; ++i) sigma[static_cast<size_t>(i)] = i + 1;
    if (spec == "id") return sigma;
    auto read_list = [&](const std::string& body) {
        std::vector<int> vals;
        for (const auto& t : split_on(body, ',')) vals.push_back(parse_int_token(t, "sigma spec", 1));
        for (int v : vals)
            if (v < 1 || v > ell) fail(ErrorKind::ParseError, "sigma position out of range");
        return vals;
    };
    if (spec.rfind("cycle:", 0) == 0) {
        auto cyc = read_list(spec.substr(6));
        if (cyc.size() < 2) fail(ErrorKind::ParseError, "cycle needs at least two positions");
        for (size_t i = 0; i < cyc.size(); ++i)
            sigma[static_cast<size_t>(cyc[i] - 1)] = cyc[(i + 1) % cyc.size()];
        return sigma;
    }
    if (spec.rfind("word:", 0) == 0) {
        auto w = read_list(spec.substr(5));
        if (static_cast<int>(w.size()) != ell) fail(ErrorKind::ParseError, "sigma word length mismatch");
        return w;
    }
    fail(ErrorKind::ParseError, "sigma must be 'id', 'cycle:<positions>' or 'word:<images>'");
}

ElemSet parse_set_spec(const std::string& spec) {
    return sorted_set(parse_word_spec(spec));
}

Word parse_word_spec(const std::string& spec) {
    Word w;
    for (const auto& t : split_on(spec, ','))
        w.push_back(parse_int_token(t, "set spec", 1));
    return w;
}

std::string monomial_str(const ElemSet& support) {
    if (support.empty()) return "1";
    std::string out = "e_{";
    for (size_t i = 0; i < support.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(support[i]);
    }
    out += "}";
    return out;
}

namespace {

std::string signed_term(const Rational& coef, const ElemSet& support, bool first) {
    Rational a = abs(coef);
    std::string mag;
    if (support.empty()) {
        mag = rational_str(a);
    } else {
        mag = (a == 1 ? "" : rational_str(a) + " ") + monomial_str(support);
    }
    if (first) return (sgn(coef) < 0 ? "-" : "") + mag;
    return (sgn(coef) < 0 ? " - " : " + ") + mag;
}

} // namespace

std::string element_str(const AlgebraElement& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : f.terms()) {
        out += signed_term(c, s, first);
        first = false;
    }
    return out;
}

std::string coefficient_map_str(const std::map<ElemSet, Rational>& coefs) {
    AlgebraElement e;
    for (const auto& [s, c] : coefs) e.add_term(s, c);
    return element_str(e);
}

OrderedJson rational_to_json(const Rational& r) {
    Rational v = r;
    v.canonicalize();
    return OrderedJson{{"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}};
}

OrderedJson element_to_json(const AlgebraElement& f) {
    OrderedJson terms = OrderedJson::array();
    for (const auto& [s, c] : f.terms()) {
        OrderedJson t;
        t["support"] = s;
        Rational v = c;
        v.canonicalize();
        t["num"] = v.get_num().get_str();
        t["den"] = v.get_den().get_str();
        terms.push_back(std::move(t));
    }
    return OrderedJson{{"terms", std::move(terms)}};
}

AlgebraElement element_from_json(const OrderedJson& j) {
    AlgebraElement f;
    if (!j.contains("terms") || !j["terms"].is_array())
        fail(ErrorKind::ParseError, "element JSON needs a 'terms' array");
    for (const auto& t : j["terms"]) {
        ElemSet s = set_from_json(t.at("support"), "element term");
        Rational num = parse_rational(t.at("num").get<std::string>());
        Rational den = parse_rational(t.at("den").get<std::string>());
        if (den == 0) fail(ErrorKind::ParseError, "zero denominator in element term");
        f.add_term(s, num / den);
    }
    return f;
}

OrderedJson coefficient_map_to_json(const std::map<ElemSet, Rational>& coefs) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& [s, c] : coefs) {
        OrderedJson t;
        t["set"] = s;
        Rational v = c;
        v.canonicalize();
        t["num"] = v.get_num().get_str();
        t["den"] = v.get_den().get_str();
        arr.push_back(std::move(t));
    }
    return arr;
}

} // namespace chios
