#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chios/linalg.hpp"
#include "oracles.hpp"

#include <random>

using namespace chios;
using namespace chios::tests;

namespace {

RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    RatMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        std::vector<std::vector<Rational>> rows(static_cast<size_t>(n),
                                                std::vector<Rational>(static_cast<size_t>(n)));
        for (auto& r : rows)
            for (auto& x : r) x = Rational(entry(rng), 1 + static_cast<int>(rng() % 3));
        CHECK(determinant(from_rows(rows)) == cofactor_det(rows));
    }
}

TEST_CASE("rank and echelon") {
    RatMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    CHECK(matrix_rank(m) == 2);
    Echelon e = reduced_row_echelon(m);
    CHECK(e.pivot_cols == std::vector<int>{0, 1});
    CHECK(e.mat.at(0, 1) == 0); // reduced, not just triangular
}

TEST_CASE("solve_unique") {
    RatMatrix a = from_rows({{1, 1}, {1, -1}, {2, 0}});
    auto x = solve_unique(a, {Rational(3), Rational(1), Rational(4)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    // inconsistent
    CHECK_FALSE(solve_unique(a, {Rational(3), Rational(1), Rational(5)}).has_value());
    // underdetermined
    RatMatrix wide = from_rows({{1, 1}});
    CHECK_FALSE(solve_unique(wide, {Rational(1)}).has_value());
}

TEST_CASE("solve round-trips on random full-rank systems") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> entry(-3, 3);
    int done = 0;
    while (done < 25) {
        int n = 2 + static_cast<int>(rng() % 3);
        std::vector<std::vector<Rational>> rows(static_cast<size_t>(n),
                                                std::vector<Rational>(static_cast<size_t>(n)));
        for (auto& r : rows)
            for (auto& x : r) x = entry(rng);
        RatMatrix a = from_rows(rows);
        if (determinant(a) == 0) continue;
        std::vector<Rational> want(static_cast<size_t>(n));
        for (auto& w : want) w = Rational(entry(rng), 2);
        std::vector<Rational> b(static_cast<size_t>(n), Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b[static_cast<size_t>(i)] += a.at(i, j) * want[static_cast<size_t>(j)];
        auto x = solve_unique(a, b);
        REQUIRE(x.has_value());
        CHECK(*x == want);
        ++done;
    }
}
