#ifndef LVED_LABELS_HPP
#define LVED_LABELS_HPP

#include <vector>

#include "lved/graph.hpp"

namespace lved {

enum class TLabel : uint8_t { B, R };

/// Block graph plus the per-vertex (t,s) and per-edge k labels driving the
/// labeled domination framework.
struct LabeledBlockGraph {
    Graph base;
    std::vector<TLabel> t;  // per vertex
    std::vector<int> s;     // per vertex, >= 0
    std::vector<int> k;     // per edge, in {0,1,2}

    LabeledBlockGraph() = default;

    /// Fresh labeling: t == B, s == 0, k == 2 everywhere.
    explicit LabeledBlockGraph(Graph g)
        : base(std::move(g)),
          t(base.num_vertices(), TLabel::B),
          s(base.num_vertices(), 0),
          k(base.num_edges(), 2) {}

    bool labels_total() const {
        return static_cast<int>(t.size()) == base.num_vertices() &&
               static_cast<int>(s.size()) == base.num_vertices() &&
               static_cast<int>(k.size()) == base.num_edges();
    }
};

}  // namespace lved

#endif
