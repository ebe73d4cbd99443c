#include "chios/chi.hpp"

#include "chios/errors.hpp"

#include <algorithm>

namespace chios {

namespace {

ElemSet word_set(const Word& w) {
    ElemSet s = w;
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

ChiMap chi_os(const Matroid& m) {
    Matroid mat = m;
    return ChiMap(ChiMap::Kind::OS, m.ground_size(), [mat](const Word& w) -> Rational {
        int sg = sort_sign(w);
        if (sg == 0) return 0;
        if (!mat.is_independent(word_set(w))) return 0;
        return sg;
    });
}

namespace {

Rational ot_value(const VectorConfig& v, const Matroid& m, const FlatBasisAssignment& b, const Word& w) {
    int sg = sort_sign(w);
    if (sg == 0) return 0;
    ElemSet s = word_set(w);
    if (!m.is_independent(s)) return 0;
    if (s.empty()) return sg;
    std::vector<RatVec> basis = b.basis_for(v, m, m.closure(s));
    std::vector<RatVec> coords;
    coords.reserve(s.size());
    for (int e : s) coords.push_back(coordinates_in_basis(basis, v.vector(e)));
    return sg * determinant(RatMatrix::from_columns(coords));
}

} // namespace

ChiMap chi_ot(const VectorConfig& v, const Matroid& m, const FlatBasisAssignment& b) {
    VectorConfig vc = v;
    Matroid mat = m;
    FlatBasisAssignment fb = b;
    return ChiMap(ChiMap::Kind::OT, m.ground_size(),
                  [vc, mat, fb](const Word& w) { return ot_value(vc, mat, fb, w); });
}

ChiMap chi_cordovil(const VectorConfig& v, const Matroid& m, const FlatBasisAssignment& b) {
    VectorConfig vc = v;
    Matroid mat = m;
    FlatBasisAssignment fb = b;
    return ChiMap(ChiMap::Kind::Cordovil, m.ground_size(),
                  [vc, mat, fb](const Word& w) { return Rational(sign(ot_value(vc, mat, fb, w))); });
}

ChiMap chi_custom(const Matroid& m, const std::map<ElemSet, Rational>& values) {
    for (const auto& [s, val] : values) {
        if (!is_sorted_set(s))
            fail(ErrorKind::ValidationError, "custom chi keys must be sorted sets");
        for (int e : s)
            if (e < 1 || e > m.ground_size())
                fail(ErrorKind::ElementOutOfRange, "custom chi key element " + std::to_string(e));
        if (!m.is_independent(s))
            fail(ErrorKind::ValidationError, "custom chi assigns a value to dependent set " + set_str(s));
        if (val == 0)
            fail(ErrorKind::ValidationError, "custom chi must be nonzero on independent set " + set_str(s));
    }
    for (int ell = 0; ell <= m.rank(); ++ell)
        for (const auto& s : independent_sets(m, ell))
            if (!values.count(s))
                fail(ErrorKind::ValidationError, "custom chi misses independent set " + set_str(s));
    Matroid mat = m;
    auto table = values;
    return ChiMap(ChiMap::Kind::Custom, m.ground_size(), [mat, table](const Word& w) -> Rational {
        int sg = sort_sign(w);
        if (sg == 0) return 0;
        auto it = table.find(word_set(w));
        if (it == table.end()) return 0;
        return sg * it->second;
    });
}

const char* chi_kind_name(ChiMap::Kind kind) {
    switch (kind) {
    case ChiMap::Kind::OS: return "os";
    case ChiMap::Kind::OT: return "ot";
    case ChiMap::Kind::Cordovil: return "cordovil";
    case ChiMap::Kind::Custom: return "custom";
    }
    return "custom";
}

} // namespace chios
