#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chios/chi.hpp"
#include "chios/errors.hpp"
#include "chios/vector_config.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <random>

using namespace chios;
using namespace chios::tests;

TEST_CASE("circuits from the six published points") {
    Matroid m = circuits_from_vectors(figure1_vectors());
    CHECK(m.ground_size() == 6);
    auto expected = figure1_circuits();
    std::sort(expected.begin(), expected.end());
    CHECK(m.circuits() == expected);
}

TEST_CASE("circuits agree with the minor-rank oracle") {
    CHECK(circuits_from_vectors(figure1_vectors()).circuits() == brute_circuits(figure1_vectors()));

    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        VectorConfig v;
        v.d = 3;
        int n = 4 + static_cast<int>(rng() % 3);
        for (int i = 0; i < n; ++i) {
            RatVec vec;
            for (int k = 0; k < 3; ++k) vec.push_back(entry(rng));
            v.vectors.push_back(vec);
        }
        CHECK(circuits_from_vectors(v).circuits() == brute_circuits(v));
    }
}

TEST_CASE("degenerate configurations") {
    VectorConfig parallel;
    parallel.d = 2;
    parallel.vectors = {{1, 2}, {2, 4}, {Rational(-1, 2), -1}};
    CHECK(circuits_from_vectors(parallel).circuits() ==
          std::vector<ElemSet>{{1, 2}, {1, 3}, {2, 3}});

    VectorConfig basis;
    basis.d = 3;
    basis.vectors = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(circuits_from_vectors(basis).circuits().empty());

    VectorConfig withzero;
    withzero.d = 2;
    withzero.vectors = {{1, 0}, {0, 0}};
    CHECK(circuits_from_vectors(withzero).circuits() == std::vector<ElemSet>{{2}});
}

TEST_CASE("lex-least flat bases") {
    VectorConfig v = figure1_vectors();
    Matroid m = circuits_from_vectors(v);
    CHECK(lex_least_basis_of_flat(m, m.ground_set()) == ElemSet{1, 2, 4});
    CHECK(lex_least_basis_of_flat(m, {1, 2, 3}) == ElemSet{1, 2});
    auto B = FlatBasisAssignment::lex_default();
    CHECK(B.basis_for(v, m, {4}) == std::vector<RatVec>{v.vector(4)});
    CHECK_THROWS_WITH_AS(B.basis_for(v, m, {1, 2}), doctest::Contains("NotAFlat"), Error);
}

TEST_CASE("explicit flat bases are validated") {
    VectorConfig v = figure1_vectors();
    Matroid m = circuits_from_vectors(v);
    // a valid non-lex basis for the whole space
    std::map<ElemSet, std::vector<RatVec>> table;
    table[m.ground_set()] = {v.vector(2), v.vector(4), v.vector(5)};
    auto B = FlatBasisAssignment::from_table(table);
    CHECK(B.basis_for(v, m, m.ground_set()).size() == 3);
    CHECK_THROWS_WITH_AS(B.basis_for(v, m, {1, 2, 3}), doctest::Contains("no basis supplied"), Error);

    std::map<ElemSet, std::vector<RatVec>> bad;
    bad[ElemSet{1, 2, 3}] = {v.vector(1), v.vector(4)}; // v4 outside the flat's span
    CHECK_THROWS_WITH_AS(FlatBasisAssignment::from_table(bad).basis_for(v, m, {1, 2, 3}),
                         doctest::Contains("outside"), Error);
}

TEST_CASE("sign chi") {
    Matroid m = figure1_matroid();
    ChiMap chi = chi_os(m);
    CHECK(chi({1, 2, 4}) == 1);
    CHECK(chi({2, 1, 4}) == -1);
    CHECK(chi({1, 2, 3}) == 0);
    CHECK(chi({}) == 1);
}

TEST_CASE("determinant chi ratios from the worked example") {
    VectorConfig v = figure1_vectors();
    Matroid m = circuits_from_vectors(v);
    ChiMap chi = chi_ot(v, m, FlatBasisAssignment::lex_default());
    CHECK(chi({1, 2, 5}) / chi({1, 6, 5}) == Rational(3, 2));
    CHECK(chi({1, 5, 2}) / chi({3, 5, 2}) == -1);
    CHECK(chi({1, 3, 5}) / chi({2, 3, 5}) == 2);
    CHECK(chi({1, 2, 4}) / chi({1, 2, 4}) == 1);
    CHECK(chi({1, 2, 3}) == 0);
}

TEST_CASE("oriented chi signs from the worked example") {
    VectorConfig v = figure1_vectors();
    Matroid m = circuits_from_vectors(v);
    auto B = FlatBasisAssignment::lex_default();
    ChiMap cd = chi_cordovil(v, m, B);
    ChiMap ot = chi_ot(v, m, B);
    CHECK(cd({1, 2, 5}) * cd({1, 6, 5}) == 1);
    CHECK(cd({1, 2, 6}) * cd({1, 5, 6}) == -1);
    for (const auto& i : independent_sets(m, 3)) {
        CHECK(cd(i) == sign(ot(i)));
        CHECK(cd(Word{i[1], i[0], i[2]}) == -cd(i));
    }
}

TEST_CASE("determinant ratios are independent of the flat basis choice") {
    VectorConfig v = figure1_vectors();
    Matroid m = circuits_from_vectors(v);
    ChiMap lex = chi_ot(v, m, FlatBasisAssignment::lex_default());

    // a scrambled but valid assignment: scale and reorder the lex bases
    std::map<ElemSet, std::vector<RatVec>> table;
    auto scale = [](RatVec vec, const Rational& c) {
        for (auto& x : vec) x *= c;
        return vec;
    };
    for (int ell = 1; ell <= 3; ++ell)
        for (const auto& i : independent_sets(m, ell)) {
            ElemSet f = m.closure(i);
            if (table.count(f)) continue;
            auto lexbase = lex_least_basis_of_flat(m, f);
            std::vector<RatVec> base;
            for (auto it = lexbase.rbegin(); it != lexbase.rend(); ++it)
                base.push_back(scale(v.vector(*it), Rational(3, 7)));
            table[f] = base;
        }
    ChiMap alt = chi_ot(v, m, FlatBasisAssignment::from_table(table));

    for (int ell = 1; ell <= 3; ++ell) {
        auto sets = independent_sets(m, ell);
        for (const auto& i : sets)
            for (const auto& j : sets) {
                if (m.closure(i) != m.closure(j)) continue;
                CHECK(lex(i) / lex(j) == alt(i) / alt(j));
            }
    }
}

TEST_CASE("custom chi table validation") {
    Matroid m = uniform_matroid(2, 3);
    std::map<ElemSet, Rational> values;
    for (int ell = 0; ell <= 2; ++ell)
        for (const auto& i : independent_sets(m, ell)) values[i] = 1;
    ChiMap chi = chi_custom(m, values);
    CHECK(chi({2, 1}) == -1);
    CHECK(chi({1, 2, 3}) == 0);

    auto missing = values;
    missing.erase(ElemSet{1, 2});
    CHECK_THROWS_WITH_AS(chi_custom(m, missing), doctest::Contains("misses"), Error);
    auto dependent = values;
    dependent[ElemSet{1, 2, 3}] = 1;
    CHECK_THROWS_WITH_AS(chi_custom(m, dependent), doctest::Contains("dependent"), Error);
}
