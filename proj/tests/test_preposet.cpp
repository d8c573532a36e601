#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "nesto/preposet.hpp"

using namespace nesto;

namespace {

using Rel = std::vector<std::pair<int, int>>;

Preposet pp(int n, Rel rel) { return Preposet(n, rel); }

Preposet chain_of(const std::vector<int>& word) {
    Rel rel;
    for (size_t k = 0; k + 1 < word.size(); ++k) rel.emplace_back(word[k], word[k + 1]);
    return Preposet(static_cast<int>(word.size()), rel);
}

// nonpolytopal complete fan of 16 tree-posets on [4]
std::vector<Preposet> sixteen_fan() {
    return {
        pp(4, {{1, 3}, {2, 3}, {3, 4}}), pp(4, {{1, 4}, {2, 4}, {4, 3}}),
        pp(4, {{3, 1}, {4, 1}, {1, 2}}), pp(4, {{3, 2}, {4, 2}, {2, 1}}),
        pp(4, {{1, 4}, {4, 2}, {4, 3}}), pp(4, {{4, 1}, {1, 2}, {1, 3}}),
        pp(4, {{2, 3}, {3, 1}, {3, 4}}), pp(4, {{3, 2}, {2, 1}, {2, 4}}),
        chain_of({1, 3, 2, 4}),          chain_of({1, 3, 4, 2}),
        chain_of({3, 1, 2, 4}),          chain_of({3, 1, 4, 2}),
        chain_of({2, 4, 1, 3}),          chain_of({2, 4, 3, 1}),
        chain_of({4, 2, 1, 3}),          chain_of({4, 2, 3, 1}),
    };
}

// the 12 vertex posets of the hexagonal prism zonotope
std::vector<Preposet> prism_fan() {
    return {
        chain_of({2, 3, 1, 4}),
        chain_of({3, 2, 1, 4}),
        chain_of({4, 1, 2, 3}),
        chain_of({4, 1, 3, 2}),
        pp(4, {{1, 2}, {2, 3}, {1, 4}}),
        pp(4, {{1, 3}, {3, 2}, {1, 4}}),
        pp(4, {{2, 3}, {3, 1}, {4, 1}}),
        pp(4, {{3, 2}, {2, 1}, {4, 1}}),
        pp(4, {{2, 1}, {1, 3}, {1, 4}}),
        pp(4, {{3, 1}, {1, 2}, {1, 4}}),
        pp(4, {{3, 1}, {1, 2}, {4, 1}}),
        pp(4, {{2, 1}, {1, 3}, {4, 1}}),
    };
}

}  // namespace

TEST_CASE("transitive closure") {
    Preposet q = pp(3, {{1, 2}, {2, 3}});
    CHECK(q.relates(1, 3));
    CHECK(q.is_poset());
    Preposet id = pp(3, {});
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(id.relates(i, j) == (i == j));
    Preposet cyc = pp(2, {{1, 2}, {2, 1}});
    CHECK_FALSE(cyc.is_poset());
    CHECK(cyc.equivalence_classes() == std::vector<Mask>{bit_of(1) | bit_of(2)});
}

TEST_CASE("is_contraction") {
    // 1 < {2,3} < 4 contracts 1<3, 2<3, 1<4, 2<4
    Preposet q1 = pp(4, {{1, 2}, {1, 3}, {2, 3}, {3, 2}, {2, 4}, {3, 4}});
    Preposet p = pp(4, {{1, 3}, {2, 3}, {1, 4}, {2, 4}});
    CHECK(is_contraction(q1, p));
    // {1,2} < 3, {1,2} < 4 does not: 1 and 2 are incomparable in p
    Preposet q2 = pp(4, {{1, 2}, {2, 1}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
    CHECK_FALSE(is_contraction(q2, p));
    CHECK(is_contraction(p, p));
    CHECK_FALSE(is_contraction(p, q1));
}

TEST_CASE("proper intersection") {
    CHECK(properly_intersect(pp(2, {{1, 2}}), pp(2, {{2, 1}})));
    CHECK_FALSE(properly_intersect(pp(3, {{2, 3}}), pp(3, {{1, 2}, {2, 3}})));
    Preposet q = pp(3, {{1, 2}});
    CHECK(properly_intersect(q, q));
}

TEST_CASE("linear extensions") {
    CHECK(linear_extensions(pp(3, {})).size() == 6);
    auto one = linear_extensions(chain_of({1, 2, 3}));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == std::vector<int>{1, 2, 3});
    auto two = linear_extensions(pp(4, {{1, 3}, {2, 3}, {3, 4}}));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == std::vector<int>{1, 2, 3, 4});
    CHECK(two[1] == std::vector<int>{2, 1, 3, 4});
    CHECK(std::is_sorted(two.begin(), two.end()));
    CHECK_THROWS_AS(linear_extensions(pp(4, {}), 10), resource_cap_error);
    CHECK_THROWS_AS(linear_extensions(pp(2, {{1, 2}, {2, 1}})), invalid_input_error);
}

TEST_CASE("covers and descents") {
    Preposet c = chain_of({2, 3, 1, 4});
    CHECK(covers(c) == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {3, 1}});
    CHECK(poset_descents(c).count == 1);
    Preposet wedge = pp(4, {{3, 2}, {2, 1}, {4, 1}});
    CHECK(poset_descents(wedge).count == 3);
    CHECK(poset_descents(chain_of({1, 2, 3, 4, 5})).count == 0);
    // reduction then re-closure is the identity
    for (const Preposet& q : sixteen_fan()) CHECK(Preposet(q.n(), covers(q)) == q);
    CHECK(is_tree_poset(c));
    CHECK(is_tree_poset(wedge));
    CHECK_FALSE(is_tree_poset(pp(3, {})));
    CHECK_FALSE(is_tree_poset(pp(4, {{1, 3}, {2, 3}, {1, 4}, {2, 4}})));
}

TEST_CASE("generalized Eulerian polynomials") {
    CHECK(generalized_eulerian(chain_of({1, 2, 3, 4})) == IntPoly{{1, 11, 11, 1}});
    // complementing the relabelling flips every cover descent, so every
    // A_Q is palindromic; the vee and wedge shapes both give 3+9t+9t^2+3t^3
    Preposet vee = pp(4, {{1, 2}, {2, 3}, {1, 4}});
    CHECK(generalized_eulerian(vee) == IntPoly{{3, 9, 9, 3}});
    Preposet wedge = pp(4, {{3, 2}, {2, 1}, {4, 1}});
    CHECK(generalized_eulerian(wedge) == IntPoly{{3, 9, 9, 3}});
    Preposet wye = pp(4, {{2, 1}, {1, 3}, {1, 4}});
    CHECK(generalized_eulerian(wye) == IntPoly{{2, 10, 10, 2}});
    Preposet lambda = pp(4, {{3, 1}, {1, 2}, {4, 1}});
    CHECK(generalized_eulerian(lambda) == IntPoly{{2, 10, 10, 2}});
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> word(n);
        std::iota(word.begin(), word.end(), 1);
        IntPoly a = generalized_eulerian(chain_of(word));
        CHECK(a == eulerian_polynomial(n));
        CHECK(a.eval(1) == factorial(n));
    }
    CHECK_THROWS_AS(generalized_eulerian(chain_of({1, 2}), 1), resource_cap_error);
}

TEST_CASE("complete fans") {
    CHECK(is_complete_fan({pp(2, {{1, 2}}), pp(2, {{2, 1}})}).complete);
    auto gap = is_complete_fan({pp(2, {{1, 2}})});
    CHECK_FALSE(gap.complete);
    CHECK(gap.status == FanStatus::gap);
    CHECK(gap.perm_witness == std::vector<int>{2, 1});
    auto dup = is_complete_fan({pp(2, {{1, 2}}), pp(2, {{1, 2}})});
    CHECK(dup.status == FanStatus::duplicate);
    auto overlap = is_complete_fan({pp(2, {{1, 2}}), pp(2, {})});
    CHECK((overlap.status == FanStatus::overlap || overlap.status == FanStatus::improper));

    auto sixteen = sixteen_fan();
    auto r = is_complete_fan(sixteen);
    CHECK(r.complete);
    size_t total = 0;
    std::set<std::vector<int>> all;
    for (const Preposet& q : sixteen) {
        auto ext = linear_extensions(q);
        total += ext.size();
        all.insert(ext.begin(), ext.end());
    }
    CHECK(total == 24);
    CHECK(all.size() == 24);
}

TEST_CASE("h polynomial of a fan of tree-posets") {
    CHECK(h_of_poset_fan(prism_fan()) == IntPoly{{1, 5, 5, 1}});
    // the fan of all chains gives the Eulerian polynomial
    std::vector<int> w{1, 2, 3, 4};
    std::vector<Preposet> chains;
    do {
        chains.push_back(chain_of(w));
    } while (std::next_permutation(w.begin(), w.end()));
    CHECK(h_of_poset_fan(chains) == eulerian_polynomial(4));

    IntPoly h16 = h_of_poset_fan(sixteen_fan());
    CHECK(h16.degree() == 3);
    CHECK(h16.is_palindromic(3));
    CHECK(h16.eval(1) == 16);

    CHECK_THROWS_AS(h_of_poset_fan({pp(2, {{1, 2}})}), invalid_input_error);
}
