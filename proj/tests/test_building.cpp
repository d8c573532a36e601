#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nesto/building.hpp"

using namespace nesto;

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}
Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n, 1);
    return g;
}
Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
}

Mask mk(std::initializer_list<int> elems) {
    Mask m = 0;
    for (int e : elems) m |= bit_of(e);
    return m;
}

// uniform-ish random building set: close random seeds under union closure
BuildingSet random_building(std::mt19937& rng, int n, int seeds) {
    std::vector<Mask> s;
    std::uniform_int_distribution<Mask> dist(1, full_mask(n));
    for (int i = 0; i < seeds; ++i) s.push_back(dist(rng));
    return building_closure(s, n);
}

}  // namespace

TEST_CASE("validate_building accepts and rejects") {
    CHECK_NOTHROW(validate_building({mk({1}), mk({2}), mk({1, 2})}, 2));
    BuildingSet disc = validate_building({mk({1}), mk({2})}, 2);
    CHECK(disc.maximal_members() == std::vector<Mask>{mk({1}), mk({2})});
    CHECK_FALSE(disc.is_connected());
    CHECK_THROWS_WITH_AS(
        validate_building({mk({1}), mk({2}), mk({3}), mk({1, 2}), mk({2, 3})}, 3),
        doctest::Contains("union of intersecting members"), invalid_input_error);
    CHECK_THROWS_WITH_AS(validate_building({mk({1}), mk({1, 2})}, 2),
                         doctest::Contains("singleton"), invalid_input_error);
    CHECK_THROWS_AS(validate_building({mk({1}), mk({2}), 0}, 2), invalid_input_error);
}

TEST_CASE("graphical buildings") {
    BuildingSet p3 = graphical_building(path_graph(3));
    CHECK(p3.members() ==
          std::vector<Mask>{mk({1}), mk({2}), mk({3}), mk({1, 2}), mk({2, 3}), mk({1, 2, 3})});
    BuildingSet k3 = graphical_building(complete_graph(3));
    CHECK(k3.members().size() == 7);
    Graph edgeless(2);
    BuildingSet e2 = graphical_building(edgeless);
    CHECK(e2.members() == std::vector<Mask>{mk({1}), mk({2})});
}

TEST_CASE("restriction") {
    BuildingSet k3 = graphical_building(complete_graph(3));
    BuildingSet r = restriction(k3, mk({1, 2}));
    CHECK(r.members() == std::vector<Mask>{mk({1}), mk({2}), mk({1, 2})});
    BuildingSet p3 = graphical_building(path_graph(3));
    BuildingSet r2 = restriction(p3, mk({1, 3}));
    CHECK(r2.members() == std::vector<Mask>{mk({1}), mk({3})});
    CHECK(restriction(p3, p3.ground()) == p3);
    CHECK_THROWS_AS(restriction(p3, 0), invalid_input_error);
}

TEST_CASE("contraction") {
    BuildingSet p3 = graphical_building(path_graph(3));
    BuildingSet c = contraction(p3, mk({2}));
    CHECK(c.members() == std::vector<Mask>{mk({1}), mk({3}), mk({1, 3})});
    BuildingSet k4 = graphical_building(complete_graph(4));
    BuildingSet c2 = contraction(k4, mk({2}));
    CHECK(c2.members().size() == 7);  // complete building on {1,3,4}
    BuildingSet c3 = contraction(p3, mk({1, 2}));
    CHECK(c3.members() == std::vector<Mask>{mk({3})});
    CHECK_THROWS_AS(contraction(p3, mk({1, 3})), invalid_input_error);
}

TEST_CASE("contraction of graphical building matches contracted graph") {
    std::mt19937 rng(7);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            Graph g(n);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (rng() % 2) g.add_edge(i, j);
            BuildingSet b = graphical_building(g);
            for (Mask i_set : b.members()) {
                if (i_set == b.ground() || popcount(i_set) == n) continue;
                BuildingSet lhs = contraction(b, i_set);
                Graph gq = g.contract(i_set);
                Mask rest = b.ground() & ~i_set;
                std::vector<Mask> members;
                for (Mask m = 1; m <= full_mask(n); ++m)
                    if ((m & ~rest) == 0 && gq.is_connected_subset(m)) members.push_back(m);
                BuildingSet rhs(members, rest);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("connected components") {
    CHECK(connected_components(graphical_building(complete_graph(3))).size() == 1);
    Graph two_edges(4);
    two_edges.add_edge(1, 2);
    two_edges.add_edge(3, 4);
    CHECK(connected_components(graphical_building(two_edges)).size() == 2);
    BuildingSet b = validate_building({mk({1}), mk({2}), mk({3}), mk({2, 3})}, 3);
    auto comps = connected_components(b);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].ground() == mk({1}));
    CHECK(comps[1].ground() == mk({2, 3}));
}

TEST_CASE("chordality") {
    for (int n = 2; n <= 7; ++n) CHECK(is_chordal(graphical_building(path_graph(n))).chordal);
    auto c4 = is_chordal(graphical_building(cycle_graph(4)));
    CHECK_FALSE(c4.chordal);
    REQUIRE(c4.witness.has_value());
    CHECK_FALSE(graphical_building(cycle_graph(4)).is_member(c4.witness->suffix));
    // interval-plus-singleton building
    std::vector<Mask> ps;
    for (int i = 1; i <= 4; ++i) {
        ps.push_back(bit_of(i));
        Mask interval = 0;
        for (int j = i; j <= 4; ++j) interval |= bit_of(j);
        ps.push_back(interval);
    }
    CHECK(is_chordal(validate_building(ps, 4)).chordal);
}

TEST_CASE("flag criterion") {
    CHECK(is_flag(graphical_building(cycle_graph(5))).flag);
    CHECK(is_flag(graphical_building(complete_graph(4))).flag);
    auto r = is_flag(validate_building({mk({1}), mk({2}), mk({3}), mk({1, 2, 3})}, 3));
    CHECK_FALSE(r.flag);
    CHECK(r.witness.size() == 3);
}

TEST_CASE("graphical buildings are flag, chordal ones too") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng() % 2) g.add_edge(i, j);
        CHECK(is_flag(graphical_building(g)).flag);
    }
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        BuildingSet b = chordal_closure(random_building(rng, n, 3));
        REQUIRE(is_chordal(b).chordal);
        CHECK(is_flag(b).flag);
    }
}

TEST_CASE("graphical chordal iff perfectly labelled chordal graph") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng() % 3 == 0) g.add_edge(i, j);
        CHECK(is_chordal(graphical_building(g)).chordal == is_perfectly_labelled_chordal(g));
        // independent recognizer: chordal graphs admit a perfect elimination
        // ordering, and relabelling along it yields a perfect labelling
        auto peo = perfect_elimination_ordering(g);
        if (!peo.empty()) {
            Graph h = relabel(g, perfect_labelling(g));
            CHECK(is_perfectly_labelled_chordal(h));
            CHECK(is_chordal(graphical_building(h)).chordal);
        } else {
            CHECK_FALSE(is_perfectly_labelled_chordal(g));
        }
    }
}

TEST_CASE("restriction and contraction keep the axioms on random buildings") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        BuildingSet b = random_building(rng, n, 4);
        for (Mask m : b.members()) {
            CHECK_NOTHROW(restriction(b, m));  // constructor re-validates
            if (m != b.ground() && (b.ground() & ~m))
                CHECK_NOTHROW(contraction(b, m));
        }
    }
}

TEST_CASE("canonical signature is relabelling-invariant") {
    BuildingSet a = restriction(graphical_building(path_graph(5)), mk({2, 3}));
    BuildingSet b = restriction(graphical_building(path_graph(5)), mk({4, 5}));
    CHECK(a.canonical_signature() == b.canonical_signature());
}
