#ifndef LVED_TESTS_ORACLES_HPP
#define LVED_TESTS_ORACLES_HPP

#include <optional>
#include <vector>

#include "lved/graph.hpp"
#include "lved/labels.hpp"
#include "lved/threedm.hpp"

// Test-only brute-force oracles, independent of the code under test.
namespace lved::testing {

Graph path_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph bowtie();

/// Minimum size of a labeled (M_LVE) dominating set by full subset
/// enumeration with the naive all-pairs verifier. n must stay tiny.
int min_mlve_size(const LabeledBlockGraph& lg);

/// Minimum liar's set size by full subset enumeration (fresh labels).
int min_lved_size_bruteforce(const Graph& g);

/// Second, independent 3-DM decider: enumerate all q-subsets of triples.
std::optional<std::vector<int>> solve_3dm_subsets(const ThreeDMInstance& inst);

}  // namespace lved::testing

#endif
