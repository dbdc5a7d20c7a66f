#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "lved/generators.hpp"
#include "lved/io.hpp"

using namespace lved;

TEST_CASE("graph round trip") {
    Graph g = gen_block_graph(3, 12);
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in(out.str());
    GraphFile gf = read_graph(in);
    CHECK(gf.graph.num_vertices() == g.num_vertices());
    CHECK(gf.graph.edges() == g.edges());
    CHECK_FALSE(gf.intervals.has_value());
    CHECK_FALSE(gf.labels.has_value());

    std::ostringstream again;
    write_graph(again, gf.graph);
    CHECK(again.str() == out.str());  // bit-exact
}

TEST_CASE("graph with intervals round trip") {
    auto [g, iv] = gen_proper_interval(4, 9);
    std::ostringstream out;
    write_graph(out, g, &iv);
    std::istringstream in(out.str());
    GraphFile gf = read_graph(in);
    REQUIRE(gf.intervals.has_value());
    CHECK(gf.intervals->left == iv.left);
    CHECK(gf.intervals->right == iv.right);
}

TEST_CASE("graph with labels round trip") {
    Graph g(3, {{0, 1}, {1, 2}});
    LabeledBlockGraph lg(g);
    lg.t[1] = TLabel::R;
    lg.s[2] = 2;
    lg.k[0] = 1;
    std::ostringstream out;
    write_graph(out, g, nullptr, &lg);
    std::istringstream in(out.str());
    GraphFile gf = read_graph(in);
    REQUIRE(gf.labels.has_value());
    CHECK(gf.labels->t[1] == TLabel::R);
    CHECK(gf.labels->s[2] == 2);
    CHECK(gf.labels->k[0] == 1);
    CHECK(gf.labels->k[1] == 2);
}

TEST_CASE("comments and malformed input") {
    std::istringstream ok("c a comment\np 2 1\ne 0 1\n");
    CHECK(read_graph(ok).graph.num_edges() == 1);

    auto expect_fail = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            read_graph(in);
            FAIL_CHECK("no error for: " << text);
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_fail("e 0 1\n", "before the p line");
    expect_fail("p 2 2\ne 0 1\n", "mismatch");
    expect_fail("p 2 1\ne 0 1\nx 1\n", "unknown record");
    expect_fail("p 2 1\ne 0 0\n", "self-loop");
    expect_fail("p 2 1\ne 0 1\ni 0 0.0 1.0\n", "incomplete");
    expect_fail("p 2 1\ne 0 1 7\n", "edge label");
    expect_fail("p 2 1\ne 0 1\nv 0 X 0\n", "t label");
}

TEST_CASE("vertex set file") {
    std::istringstream in("c witness\n3\n1\n4\n");
    CHECK(read_vertex_set(in) == std::vector{3, 1, 4});
    std::ostringstream out;
    write_vertex_set(out, {1, 3, 4});
    CHECK(out.str() == "1\n3\n4\n");
    std::istringstream bad("1\nfoo\n");
    CHECK_THROWS_AS(read_vertex_set(bad), std::runtime_error);
}

TEST_CASE("3-DM file round trip") {
    ThreeDMInstance inst = gen_3dm(2, 3, 5, true);
    std::ostringstream out;
    write_3dm(out, inst);
    std::istringstream in(out.str());
    ThreeDMInstance back = read_3dm(in);
    CHECK(back.q == inst.q);
    CHECK(back.triples == inst.triples);

    std::istringstream bad("q 2 1\nt 0 0 5\n");
    CHECK_THROWS_AS(read_3dm(bad), std::runtime_error);
    std::istringstream missing("t 0 0 0\n");
    CHECK_THROWS_AS(read_3dm(missing), std::runtime_error);
}
