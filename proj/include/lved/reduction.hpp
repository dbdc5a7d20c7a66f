#ifndef LVED_REDUCTION_HPP
#define LVED_REDUCTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "lved/graph.hpp"
#include "lved/threedm.hpp"

namespace lved {

/// Hardness gadget built from a 3-DM instance: a graph whose maximal cliques
/// form a tree in which every vertex's cliques induce a path (an undirected
/// path graph), together with that clique tree and the target set size.
struct ReductionOutput {
    Graph graph{0, {}};
    std::vector<std::vector<int>> clique_nodes;     // sorted member vertex ids
    std::vector<std::pair<int, int>> tree_edges;    // indices into clique_nodes
    int target_k = 0;                               // 4p + 10q
    std::vector<std::string> vertex_names;          // e.g. "A_1", "R2_3"

    int name_to_id(const std::string& name) const;  // -1 if absent
};

/// Builds the gadget: 16p + 18q vertices, 8p + 18q + 1 clique-tree nodes,
/// target 4p + 10q.
ReductionOutput reduce_3dm(const ThreeDMInstance& inst);

struct CliqueTreeVerdict {
    bool ok = true;
    std::string reason;  // empty when ok
};

/// Checks: the tree is connected and acyclic, every node induces a clique,
/// every graph edge lies in some node, and each vertex's nodes induce a path.
CliqueTreeVerdict verify_clique_tree(const ReductionOutput& out);

/// The explicit dominating set of size 4p + 10q induced by a perfect
/// matching (triple indices). Throws std::invalid_argument if the matching
/// is not a valid perfect matching of the instance.
VertexSet build_witness(const ReductionOutput& out, const ThreeDMInstance& inst,
                        const std::vector<int>& matching);

}  // namespace lved

#endif
