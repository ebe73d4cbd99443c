#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chios/errors.hpp"
#include "chios/matroid.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace chios;
using namespace chios::tests;

TEST_CASE("construction validates circuits") {
    CHECK_NOTHROW(figure1_matroid());
    CHECK_THROWS_AS(Matroid::from_circuits(2, {{1}, {1, 2}}), Error);
    CHECK_THROWS_WITH_AS(Matroid::from_circuits(2, {{1}, {1, 2}}),
                         doctest::Contains("ComparableCircuits"), Error);
    CHECK_THROWS_WITH_AS(Matroid::from_circuits(2, {{3}}), doctest::Contains("ElementOutOfRange"), Error);
    // {1,2} and {2,3} without a circuit inside {1,3} breaks elimination
    CHECK_THROWS_WITH_AS(Matroid::from_circuits(3, {{1, 2}, {2, 3}}), doctest::Contains("elimination"),
                         Error);
    CHECK_NOTHROW(Matroid::from_circuits(3, {{1, 2}, {2, 3}, {1, 3}}));
    Matroid free3 = Matroid::from_circuits(3, {});
    CHECK(free3.rank() == 3);
    CHECK(free3.elimination_checked());
}

TEST_CASE("elimination check is skipped above n = 12") {
    std::vector<ElemSet> circuits = {{1, 2, 3}};
    Matroid big = Matroid::from_circuits(13, circuits);
    CHECK_FALSE(big.elimination_checked());
    Matroid small = Matroid::from_circuits(12, circuits);
    CHECK(small.elimination_checked());
}

TEST_CASE("independence, rank, closure on the six-point configuration") {
    Matroid m = figure1_matroid();
    CHECK(m.is_independent({1, 2, 4}));
    CHECK_FALSE(m.is_independent({1, 2, 3}));
    CHECK(m.is_independent({}));
    CHECK(m.rank(m.ground_set()) == 3);
    CHECK(m.rank({1, 2, 3}) == 2);
    CHECK(m.rank({}) == 0);
    CHECK(m.closure({1, 2}) == ElemSet{1, 2, 3});
    CHECK(m.closure({1, 2, 4}) == m.ground_set());
    CHECK(m.closure(m.ground_set()) == m.ground_set());
}

TEST_CASE("rank and closure agree with the exhaustive oracle") {
    Matroid m = figure1_matroid();
    auto circuits = figure1_circuits();
    for (const auto& x : all_subsets(m.ground_set())) {
        CHECK(m.rank(x) == brute_rank(circuits, x));
        CHECK(m.closure(x) == brute_closure(6, circuits, x));
    }
}

TEST_CASE("unique circuit of a unidependent set") {
    Matroid m = figure1_matroid();
    CHECK(m.unique_circuit({1, 2, 3, 4}) == ElemSet{1, 2, 3});
    CHECK(m.unique_circuit({1, 4, 5}) == ElemSet{1, 4, 5});
    CHECK_THROWS_WITH_AS(m.unique_circuit({1, 2, 4}), doctest::Contains("NotUnidependent"), Error);
}

TEST_CASE("broken circuits") {
    Matroid m = figure1_matroid();
    Perm nat = Perm::natural(6);
    std::vector<ElemSet> expected = {{2, 3}, {2, 4, 6}, {3, 4, 5}, {3, 5, 6}, {4, 5}, {4, 6}, {5, 6}};
    CHECK(broken_circuits(m, nat) == expected);

    Perm pi({2, 3, 4, 5, 6, 1});
    auto bc = broken_circuits(m, pi);
    CHECK(std::find(bc.begin(), bc.end(), ElemSet{1, 3}) != bc.end());

    Matroid u23 = uniform_matroid(2, 3);
    CHECK(broken_circuits(u23, Perm::natural(3)) == std::vector<ElemSet>{{2, 3}});

    Matroid looped = Matroid::from_circuits(2, {{1}});
    CHECK_THROWS_WITH_AS(broken_circuits(looped, Perm::natural(2)), doctest::Contains("LoopPresent"),
                         Error);
}

TEST_CASE("nbc sets match the published lists") {
    Matroid m = figure1_matroid();
    Perm nat = Perm::natural(6);
    CHECK(nbc_sets(m, nat, 3) ==
          std::vector<ElemSet>{{1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 3, 6}});
    CHECK(nbc_sets(m, nat, 2) ==
          std::vector<ElemSet>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6},
                               {3, 4}, {3, 5}, {3, 6}});
    CHECK(nbc_sets(m, nat, 0) == std::vector<ElemSet>{{}});
}

TEST_CASE("inactive unidependents match the published lists") {
    Matroid m = figure1_matroid();
    CHECK(inactive_unidependents(m, 3) ==
          std::vector<ElemSet>{{1, 2, 3}, {1, 4, 5}, {2, 5, 6}, {3, 4, 6}});
    CHECK(inactive_unidependents(m, 4) ==
          std::vector<ElemSet>{{1, 2, 3, 4},
                               {1, 2, 3, 5},
                               {1, 2, 3, 6},
                               {1, 2, 4, 5},
                               {1, 2, 4, 6},
                               {1, 2, 5, 6},
                               {1, 3, 4, 5},
                               {1, 3, 4, 6},
                               {1, 3, 5, 6},
                               {1, 4, 5, 6}});
    CHECK(inactive_unidependents(uniform_matroid(2, 3), 3) == std::vector<ElemSet>{{1, 2, 3}});
}

TEST_CASE("deletion and contraction relabel and stay valid") {
    Matroid m = figure1_matroid();

    Minor del = deletion(m, 6);
    CHECK(del.matroid.circuits() == std::vector<ElemSet>{{1, 2, 3}, {1, 4, 5}, {2, 3, 4, 5}});
    CHECK(del.parent_labels({1, 2, 3}) == ElemSet{1, 2, 3});

    Minor con = contraction(m, 6);
    CHECK(con.matroid.rank() == 2);
    std::vector<ElemSet> expected = {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 5}, {2, 5}, {3, 4}};
    CHECK(con.matroid.circuits() == expected);

    // relabeling shifts elements above the removed one
    Minor con1 = contraction(m, 1);
    CHECK(con1.parent_labels({1, 2, 3, 4, 5}) == ElemSet{2, 3, 4, 5, 6});
    // contracting 1 turns {1,2,3} into the parallel pair {2,3} -> labels {1,2}
    const auto& cc = con1.matroid.circuits();
    CHECK(std::find(cc.begin(), cc.end(), ElemSet{1, 2}) != cc.end());

    Matroid free4 = Matroid::from_circuits(4, {});
    CHECK(contraction(free4, 2).matroid.circuits().empty());
    CHECK(contraction(free4, 2).matroid.ground_size() == 3);

    Matroid looped = Matroid::from_circuits(2, {{1}});
    CHECK_THROWS_WITH_AS(contraction(looped, 1), doctest::Contains("LoopContraction"), Error);
}

TEST_CASE("minimal broken-circuit circuits") {
    Matroid m = figure1_matroid();
    CHECK(minimal_broken_circuit_circuits(m, Perm::natural(6)) ==
          std::vector<ElemSet>{{1, 2, 3}, {1, 4, 5}, {2, 5, 6}, {3, 4, 6}});
    CHECK(minimal_broken_circuit_circuits(m, Perm({2, 3, 4, 5, 6, 1})) ==
          std::vector<ElemSet>{{1, 2, 3}, {1, 4, 5}, {2, 3, 4, 5}, {2, 5, 6}, {3, 4, 6}});
    CHECK(minimal_broken_circuit_circuits(uniform_matroid(2, 3), Perm::natural(3)) ==
          std::vector<ElemSet>{{1, 2, 3}});
}

TEST_CASE("shared broken circuits keep a single representative") {
    // four collinear points: all 3-subsets are circuits; 134 and 234
    // share the broken circuit {3,4}
    Matroid line = uniform_matroid(2, 4);
    auto picked = minimal_broken_circuit_circuits(line, Perm::natural(4));
    CHECK(picked == std::vector<ElemSet>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
    // distinct members have incomparable broken circuits
    std::vector<ElemSet> brokens;
    for (const auto& c : picked) brokens.push_back(without_element(c, 1));
    for (size_t i = 0; i < brokens.size(); ++i)
        for (size_t j = 0; j < brokens.size(); ++j)
            if (i != j) CHECK_FALSE(is_subset(brokens[i], brokens[j]));
}

TEST_CASE("permutation order semantics") {
    Perm pi({2, 3, 4, 5, 6, 1});
    CHECK(pi.min_of({1, 2, 3}) == 2);
    CHECK(pi.min_of({1, 4, 5}) == 4);
    CHECK(pi.less(6, 1));
    CHECK(pi.sorted_word({1, 2, 6}) == Word{2, 6, 1});
    CHECK_THROWS_AS(Perm({1, 1, 2}), Error);
    CHECK(Perm::natural(4).is_natural());
}
