#include <doctest.h>

#include <stdexcept>

#include <random>

#include "lved/exact.hpp"
#include "lved/generators.hpp"
#include "lved/interval.hpp"
#include "lved/verifier.hpp"
#include "oracles.hpp"

using namespace lved;
using namespace lved::testing;

namespace {

IntervalRepresentation unit_intervals(std::initializer_list<double> lefts, double len) {
    IntervalRepresentation iv;
    for (double l : lefts) {
        iv.left.push_back(l);
        iv.right.push_back(l + len);
    }
    return iv;
}

}  // namespace

TEST_CASE("validation rejects malformed representations") {
    Graph k2 = complete_graph(2);
    IntervalRepresentation dup = unit_intervals({1.0, 1.0}, 2.0);
    CHECK_THROWS_AS(dup.validate(k2), std::invalid_argument);

    IntervalRepresentation contain;
    contain.left = {1.0, 2.0};
    contain.right = {6.0, 3.0};  // second inside first
    CHECK_THROWS_AS(contain.validate(k2), std::invalid_argument);

    IntervalRepresentation inverted;
    inverted.left = {3.0, 1.0};
    inverted.right = {2.0, 4.0};
    CHECK_THROWS_AS(inverted.validate(k2), std::invalid_argument);

    // intervals disjoint but the graph has the edge
    IntervalRepresentation apart = unit_intervals({0.0, 10.0}, 1.5);
    CHECK_THROWS_AS(apart.validate(k2), std::invalid_argument);

    // intervals intersect but the edge is missing
    Graph empty2(2, {});
    IntervalRepresentation together = unit_intervals({0.0, 1.0}, 1.5);
    CHECK_THROWS_AS(together.validate(empty2), std::invalid_argument);
}

TEST_CASE("edge interval order on a triangle") {
    // I(0)=[1,4], I(1)=[2,5], I(2)=[3,6]
    Graph k3 = complete_graph(3);
    IntervalRepresentation iv = unit_intervals({1.0, 2.0, 3.0}, 3.0);
    auto order = edge_interval_order(k3, iv);
    // sigma must be edges (0,1), (0,2), (1,2) in that sequence
    std::vector<std::pair<int, int>> seq;
    for (int e : order.sigma) seq.push_back(k3.edge(e));
    CHECK(seq == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    for (int e = 0; e < 3; ++e) {
        auto [u, v] = order.oriented[e];
        CHECK(iv.right[u] < iv.right[v]);
    }
}

TEST_CASE("edge interval order on a path") {
    Graph p3 = path_graph(3);
    IntervalRepresentation iv = unit_intervals({0.0, 1.0, 2.0}, 1.5);
    auto order = edge_interval_order(p3, iv);
    std::vector<std::pair<int, int>> seq;
    for (int e : order.sigma) seq.push_back(p3.edge(e));
    CHECK(seq == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    Graph k2 = complete_graph(2);
    IntervalRepresentation single = unit_intervals({0.0, 1.0}, 1.5);
    CHECK(edge_interval_order(k2, single).sigma.size() == 1);
}

TEST_CASE("top_q picks the largest right endpoints") {
    IntervalRepresentation iv;
    iv.left = {1.0, 2.0, 3.0};
    iv.right = {4.0, 5.0, 6.0};
    CHECK(top_q({0, 1, 2}, 2, iv) == std::vector{2, 1});
    CHECK(top_q({0, 1, 2}, 0, iv).empty());
    CHECK(top_q({0, 1, 2}, 3, iv) == std::vector{2, 1, 0});
    CHECK_THROWS_AS(top_q({0, 1}, 3, iv), std::invalid_argument);
}

TEST_CASE("golden minima") {
    Graph p4 = path_graph(4);
    IntervalRepresentation ivp4 = unit_intervals({0.0, 1.0, 2.0, 3.0}, 1.5);
    auto l = lved_proper_interval(p4, ivp4);
    CHECK(is_lved_set(p4, l).ok);
    CHECK(l.size() == 3);

    Graph k3 = complete_graph(3);
    IntervalRepresentation ivk3 = unit_intervals({1.0, 2.0, 3.0}, 3.0);
    CHECK(lved_proper_interval(k3, ivk3).size() == 3);

    Graph p7 = path_graph(7);
    IntervalRepresentation ivp7 = unit_intervals({0, 1, 2, 3, 4, 5, 6}, 1.5);
    auto l7 = lved_proper_interval(p7, ivp7);
    CHECK(is_lved_set(p7, l7).ok);
    CHECK(l7.size() == min_lved_exact(p7).set.size());
}

TEST_CASE("oracle equivalence on random proper interval graphs") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);
        auto [g, iv] = gen_proper_interval(rng(), n, 1.0 + (trial % 4));
        IntervalSolveOptions opts;
        opts.debug_invariants = true;
        auto mine = lved_proper_interval(g, iv, opts);
        INFO("trial ", trial, " n=", n);
        CHECK(is_lved_set(g, mine).ok);
        CHECK(mine.size() == min_lved_exact(g).set.size());
    }
}

TEST_CASE("disconnected input is solved per component") {
    Graph g(5, {{0, 1}, {3, 4}});
    IntervalRepresentation iv;
    iv.left = {0.0, 1.0, 10.0, 20.0, 21.0};
    iv.right = {1.5, 2.5, 11.5, 21.6, 22.6};
    auto l = lved_proper_interval(g, iv);
    CHECK(is_lved_set(g, l).ok);
    CHECK(l.size() == 4);
    CHECK_FALSE(l.contains(2));
}

TEST_CASE("edgeless graph yields the empty set") {
    Graph g(2, {});
    IntervalRepresentation iv = unit_intervals({0.0, 10.0}, 1.5);
    CHECK(lved_proper_interval(g, iv).size() == 0);
}
