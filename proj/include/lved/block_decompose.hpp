#ifndef LVED_BLOCK_DECOMPOSE_HPP
#define LVED_BLOCK_DECOMPOSE_HPP

#include <vector>

#include "lved/graph.hpp"

namespace lved {

/// Blocks, cut vertices and the rooted cut tree of a connected block graph.
/// The cut tree alternates block nodes and cut-vertex nodes; it is rooted at
/// the smallest-id cut vertex (root_cut == -1 when the graph is one block).
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // sorted vertex lists
    std::vector<int> cut_vertices;         // sorted
    std::vector<char> is_cut;              // per vertex

    int root_cut = -1;
    std::vector<int> block_parent_cut;               // per block; -1 iff root_cut == -1
    std::vector<std::vector<int>> block_child_cuts;  // per block, increasing id
    std::vector<int> cut_parent_block;               // per vertex; -1 for non-cut / root
    std::vector<std::vector<int>> cut_child_blocks;  // per vertex

    /// Reverse BFS order of the block nodes of the rooted cut tree: deepest
    /// blocks first, level-1 blocks last.
    std::vector<int> sigma_b;
};

/// Throws std::invalid_argument on disconnected input or when some block is
/// not a clique ("not a block graph").
BlockDecomposition block_cut_decompose(const Graph& g);

}  // namespace lved

#endif
