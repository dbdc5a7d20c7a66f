#include <doctest.h>

#include <stdexcept>

#include "lved/exact.hpp"
#include "lved/generators.hpp"
#include "lved/reduction.hpp"
#include "lved/verifier.hpp"
#include "oracles.hpp"

using namespace lved;
using namespace lved::testing;

TEST_CASE("count identities") {
    struct Case {
        int q, p;
    };
    for (auto [q, p] : {Case{1, 1}, Case{2, 2}, Case{2, 3}, Case{3, 4}}) {
        ThreeDMInstance inst = gen_3dm(100 * q + p, q, p, true);
        auto out = reduce_3dm(inst);
        INFO("q=", q, " p=", p);
        CHECK(out.graph.num_vertices() == 16 * p + 18 * q);
        CHECK(static_cast<int>(out.clique_nodes.size()) == 8 * p + 18 * q + 1);
        CHECK(out.target_k == 4 * p + 10 * q);
        auto verdict = verify_clique_tree(out);
        INFO(verdict.reason);
        CHECK(verdict.ok);
    }
}

TEST_CASE("q=1 p=1 gadget in detail") {
    ThreeDMInstance inst{1, {{0, 0, 0}}};
    auto out = reduce_3dm(inst);
    CHECK(out.graph.num_vertices() == 34);
    CHECK(out.clique_nodes.size() == 27);
    CHECK(out.target_k == 14);
    CHECK(out.name_to_id("A_1") == 0);
    CHECK(out.name_to_id("R2_1") != -1);
    CHECK(out.name_to_id("nope") == -1);
}

TEST_CASE("witness: size, feasibility, and excluded families") {
    for (int seed = 0; seed < 5; ++seed) {
        int q = 1 + seed % 2, p = std::min(q + seed % 3, q * q * q);
        ThreeDMInstance inst = gen_3dm(seed, q, p, true);
        auto matching = solve_3dm(inst);
        REQUIRE(matching.has_value());
        auto out = reduce_3dm(inst);
        auto witness = build_witness(out, inst, *matching);
        CHECK(witness.size() == 4 * p + 10 * q);
        auto verdict = is_lved_set(out.graph, witness);
        INFO("seed ", seed, ": ", verdict.describe(out.graph));
        CHECK(verdict.ok);
        for (int v : witness.members()) {
            char family = out.vertex_names[v][0];
            CHECK(std::string("HJKONPQYZ").find(family) == std::string::npos);
        }
    }
}

TEST_CASE("witness validation rejects bad matchings") {
    ThreeDMInstance inst = gen_3dm(1, 2, 3, true);
    auto out = reduce_3dm(inst);
    CHECK_THROWS_AS(build_witness(out, inst, {0}), std::invalid_argument);
    CHECK_THROWS_AS(build_witness(out, inst, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_witness(out, inst, {0, 99}), std::invalid_argument);
}

TEST_CASE("clique tree verifier catches manufactured violations") {
    ThreeDMInstance inst{1, {{0, 0, 0}}};
    auto out = reduce_3dm(inst);

    auto broken_path = out;
    // move a chain vertex into a far-away node: its holders now branch/split
    broken_path.clique_nodes.front().push_back(out.name_to_id("R5_1"));
    CHECK_FALSE(verify_clique_tree(broken_path).ok);

    auto broken_cover = out;
    // shrink one two-vertex chain node: its private edge loses coverage
    for (auto& node : broken_cover.clique_nodes)
        if (node.size() == 2) {
            node.pop_back();
            break;
        }
    CHECK_FALSE(verify_clique_tree(broken_cover).ok);

    auto broken_tree = out;
    broken_tree.tree_edges.pop_back();
    CHECK_FALSE(verify_clique_tree(broken_tree).ok);
}

TEST_CASE("smallest gadget optimum meets the target bound") {
    // q=1, p=1 is the only size where the exact branch-and-bound finishes
    // quickly enough to probe the bound direction from below
    ThreeDMInstance inst{1, {{0, 0, 0}}};
    auto out = reduce_3dm(inst);
    auto witness = build_witness(out, inst, {0});
    CHECK(is_lved_set(out.graph, witness).ok);
    // the witness shows minimum <= 14; the Claim says equality for solvable
    // instances, so a quick probe must NOT confirm "minimum > 14"
    auto probe = probe_min_exceeds(out.graph, out.target_k, std::chrono::milliseconds(3000));
    CHECK(probe != ProbeResult::Confirmed);
}
