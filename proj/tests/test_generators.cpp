#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "lved/block_decompose.hpp"
#include "lved/generators.hpp"
#include "lved/io.hpp"
#include "lved/threedm.hpp"

using namespace lved;

TEST_CASE("block generator: validity and determinism") {
    CHECK(gen_block_graph(1, 2).num_edges() == 1);  // n=2 forces K2
    for (std::uint64_t seed : {1ULL, 7ULL, 99ULL}) {
        Graph g = gen_block_graph(seed, 30);
        CHECK(g.connected());
        CHECK_NOTHROW(block_cut_decompose(g));
    }
    std::ostringstream a, b;
    write_graph(a, gen_block_graph(42, 10));
    write_graph(b, gen_block_graph(42, 10));
    CHECK(a.str() == b.str());
    CHECK(a.str() != [] {
        std::ostringstream c;
        write_graph(c, gen_block_graph(43, 10));
        return c.str();
    }());
}

TEST_CASE("proper interval generator: validity and determinism") {
    Graph lone = gen_proper_interval(5, 1).first;
    CHECK(lone.num_vertices() == 1);
    CHECK(lone.num_edges() == 0);
    for (std::uint64_t seed : {3ULL, 8ULL, 21ULL}) {
        auto [g, iv] = gen_proper_interval(seed, 25);
        CHECK(g.connected());
        CHECK_NOTHROW(iv.validate(g));  // distinct endpoints, proper, consistent
    }
    std::ostringstream a, b;
    auto [g1, iv1] = gen_proper_interval(11, 12);
    auto [g2, iv2] = gen_proper_interval(11, 12);
    write_graph(a, g1, &iv1);
    write_graph(b, g2, &iv2);
    CHECK(a.str() == b.str());
}

TEST_CASE("random graph generator") {
    Graph empty = gen_random_graph(1, 6, 0.0);
    CHECK(empty.num_edges() == 0);
    Graph full = gen_random_graph(1, 6, 1.0);
    CHECK(full.num_edges() == 15);
}

TEST_CASE("3-DM generator") {
    auto planted = gen_3dm(5, 2, 4, true);
    CHECK(planted.p() == 4);
    CHECK(solve_3dm(planted).has_value());

    // all triples sharing u0 admit no matching for q >= 2
    ThreeDMInstance clash{2, {{0, 0, 0}, {0, 1, 1}, {0, 0, 1}}};
    CHECK_FALSE(solve_3dm(clash).has_value());

    auto a = gen_3dm(9, 3, 7, false);
    auto b = gen_3dm(9, 3, 7, false);
    CHECK(a.triples == b.triples);
    CHECK_NOTHROW(a.validate());
    CHECK_THROWS_AS(gen_3dm(1, 2, 9, false), std::invalid_argument);  // p > q^3
}
